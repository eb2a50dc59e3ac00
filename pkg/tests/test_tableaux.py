import pytest

from hlgal.folding import is_positively_folded
from hlgal.gallery import enumerate_of_type, gamma_lambda, type_of_lambda
from hlgal.oracles import kostka
from hlgal.tableaux import (
    Tableau,
    bar,
    content_weight,
    gallery_to_tableau,
    is_semistandard,
    pretty,
    shape_partition,
    tableau_from_jsonable,
    tableau_to_gallery,
    tableau_to_jsonable,
)


def test_shape_partitions(a3, b3, c3):
    lam = lambda rs: rs.weight((1, 1, 1))
    assert shape_partition(a3, lam(a3)) == (3, 2, 1)
    assert shape_partition(b3, lam(b3)) == (5, 3, 1)
    assert shape_partition(c3, lam(c3)) == (5, 4, 2)
    assert shape_partition(a3, a3.weight((0, 0, 0))) == ()


def test_highest_weight_filling(a3):
    rs = a3
    lam = rs.weight((1, 1, 1))
    tab = gallery_to_tableau(rs, gamma_lambda(rs, lam))
    # row i is constantly i: every column is 1..height
    for col in tab.columns:
        assert col == tuple(range(1, len(col) + 1))
    assert is_semistandard(tab)


def test_known_example_tableaux_are_valid():
    # three known semistandard fillings for lambda = w1+w2+w3, written
    # column by column from the right
    from hlgal.folding import is_LS
    from hlgal.rootdata import root_system

    a3 = root_system("A", 3)
    t_a = Tableau("A", 3, ((3,), (1, 3), (1, 2, 3)))
    g = tableau_to_gallery(a3, t_a)
    assert gallery_to_tableau(a3, g) == t_a
    assert is_semistandard(t_a)
    assert is_positively_folded(a3, g)

    b3 = root_system("B", 3)
    nb = lambda k: bar(3, k)  # barred letter code
    t_b = Tableau(
        "B",
        3,
        ((nb(2),), (2,), (2, nb(1)), (1, 2), (1, 2, nb(3))),
    )
    g = tableau_to_gallery(b3, t_b)
    assert gallery_to_tableau(b3, g) == t_b
    assert is_semistandard(t_b)
    assert is_positively_folded(b3, g)
    assert not is_LS(b3, g)  # semistandard yet not LS

    c3 = root_system("C", 3)
    nc = lambda k: bar(3, k)
    t_c = Tableau(
        "C",
        3,
        ((nc(3),), (3, nc(2)), (2, nc(3)), (1, nc(3), nc(2)), (1, 2, 3)),
    )
    g = tableau_to_gallery(c3, t_c)
    assert gallery_to_tableau(c3, g) == t_c
    assert is_semistandard(t_c)
    assert is_positively_folded(c3, g)


def test_roundtrip_all_galleries(a2, b2):
    for rs, coeffs in ((a2, (2, 1)), (b2, (1, 1))):
        lam = rs.weight(coeffs)
        for g in enumerate_of_type(rs, type_of_lambda(rs, lam)):
            tab = gallery_to_tableau(rs, g)
            assert tableau_to_gallery(rs, tab) == g


def test_semistandard_iff_positively_folded(c2):
    rs = c2
    lam = rs.weight((1, 1))
    for g in enumerate_of_type(rs, type_of_lambda(rs, lam)):
        assert is_semistandard(gallery_to_tableau(rs, g)) == is_positively_folded(rs, g)


def test_row_descent_is_not_semistandard():
    t = Tableau("A", 2, ((1,), (2, 3)))  # row 1 reads 2 then 1: descent
    assert not is_semistandard(t)
    t_ok = Tableau("A", 2, ((2,), (1, 3)))
    assert is_semistandard(t_ok)


def test_content_matches_target(b2):
    rs = b2
    lam = rs.weight((1, 1))
    for g in enumerate_of_type(rs, type_of_lambda(rs, lam)):
        assert content_weight(rs, gallery_to_tableau(rs, g)) == g.target


def test_ssyt_count_matches_kostka_and_galleries(a2):
    rs = a2
    lam = rs.weight((2, 1))
    for coeffs in [(2, 1), (0, 2), (1, 0)]:
        mu = rs.weight(coeffs)
        mu_c = rs.canonical_weight(mu)
        n_tab = 0
        for g in enumerate_of_type(rs, type_of_lambda(rs, lam)):
            tab = gallery_to_tableau(rs, g)
            if is_semistandard(tab) and rs.canonical_weight(g.target) == mu_c:
                n_tab += 1
        assert n_tab == kostka(rs, lam, mu)


def test_malformed_tableaux_rejected(b2, c2):
    with pytest.raises(ValueError):
        tableau_to_gallery(b2, Tableau("B", 2, ((1, bar(2, 1)),)))  # 1 and barred 1
    with pytest.raises(ValueError):
        tableau_to_gallery(b2, Tableau("B", 2, ((2, 1),)))  # not increasing
    with pytest.raises(ValueError):
        # C pair with an odd number of sign exchanges
        tableau_to_gallery(c2, Tableau("C", 2, ((1, 2), (1, bar(2, 2)))))
    with pytest.raises(ValueError):
        # paired columns must agree up to sign exchanges
        tableau_to_gallery(b2, Tableau("B", 2, ((1,), (2,), (1, 2), (1, 2))))


def test_json_and_pretty(b2):
    rs = b2
    g = gamma_lambda(rs, rs.weight((1, 1)))
    tab = gallery_to_tableau(rs, g)
    data = tableau_to_jsonable(tab)
    assert tableau_from_jsonable(data) == tab
    text = pretty(tab)
    assert len(text.splitlines()) == len(shape_partition(rs, rs.weight((1, 1))))
