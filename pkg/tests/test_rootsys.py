"""Tests for the root-system combinatorics and the matrix realization."""

from __future__ import annotations

import random

import pytest

from sympbw.rootsys import (
    BarredIndex,
    PositiveRoot,
    cartan_matrix,
    chevalley_realization,
    coefficient_root_map,
    epsilon_coords,
    index_from_position,
    index_position,
    index_successor,
    is_hook_root,
    is_simple_root,
    is_valid_root,
    make_index,
    make_root,
    path_bound,
    positive_roots,
    root_from_json,
    root_index_map,
    root_successors,
    root_to_json,
    simple_coefficients,
    simple_root,
    skew_form,
    validate_weight,
    variable_key,
    _bracket,
    _mat_mul,
    _proportionality,
)


def test_alphabet_order():
    n = 3
    letters = [index_from_position(p, n) for p in range(1, 2 * n)]
    assert letters == [
        BarredIndex(1, False), BarredIndex(2, False), BarredIndex(3, False),
        BarredIndex(2, True), BarredIndex(1, True),
    ]
    assert [index_position(q, n) for q in letters] == [1, 2, 3, 4, 5]
    assert index_successor(BarredIndex(3, False), n) == BarredIndex(2, True)
    assert index_successor(BarredIndex(1, True), n) is None


def test_bar_n_normalizes():
    assert make_index(3, True, 3) == BarredIndex(3, False)
    assert make_root(1, 3, True, 3) == make_root(1, 3, False, 3)


def test_validate_weight():
    assert validate_weight([1, 0]) == (1, 0)
    assert validate_weight((0, 0, 0)) == (0, 0, 0)
    with pytest.raises(ValueError):
        validate_weight(())
    with pytest.raises(ValueError):
        validate_weight((1, -1))


def test_positive_roots_reading_order():
    roots = positive_roots(2)
    assert [str(a) for a in roots] == ["a[1,1]", "a[1,2]", "a[1,1~]", "a[2,2]"]
    for n in range(1, 7):
        assert len(positive_roots(n)) == n * n
    # row i spans positions i..2n-i, ascending
    n = 4
    for alpha, beta in zip(positive_roots(n), positive_roots(n)[1:]):
        assert variable_key(alpha, n) < variable_key(beta, n)


def test_simple_and_hook_classification():
    n = 3
    simples = [a for a in positive_roots(n) if is_simple_root(a)]
    assert simples == [simple_root(k) for k in (1, 2, 3)]
    hooks = [a for a in positive_roots(n) if is_hook_root(a, n)]
    assert [str(a) for a in hooks] == ["a[1,1~]", "a[2,2~]", "a[3,3]"]


def test_root_successors():
    n = 2
    a11 = make_root(1, 1, False, n)
    # right step only: the spot below a[1,1] is outside the triangle
    assert root_successors(a11, n) == {make_root(1, 2, False, n)}
    a12 = make_root(1, 2, False, n)
    assert root_successors(a12, n) == {make_root(1, 1, True, n),
                                       make_root(2, 2, False, n)}
    hook = make_root(1, 1, True, n)
    assert root_successors(hook, n) == set()
    assert root_successors(make_root(2, 2, False, n), n) == set()


def test_simple_coefficients_and_epsilon():
    n = 2
    assert simple_coefficients(make_root(1, 2, False, n), n) == (1, 1)
    assert simple_coefficients(make_root(1, 1, True, n), n) == (2, 1)
    assert epsilon_coords(make_root(1, 2, False, n), n) == (1, 1)
    assert epsilon_coords(make_root(1, 1, True, n), n) == (2, 0)
    n = 3
    assert epsilon_coords(make_root(1, 2, False, n), n) == (1, 0, -1)
    assert epsilon_coords(make_root(1, 3, False, n), n) == (1, 0, 1)
    assert epsilon_coords(make_root(2, 2, True, n), n) == (0, 2, 0)
    # coefficient map inverts simple_coefficients
    for alpha in positive_roots(n):
        assert coefficient_root_map(n)[simple_coefficients(alpha, n)] == alpha


def test_is_valid_root():
    assert is_valid_root(make_root(2, 2, False, 2), 2)
    # constructed raw, since make_root refuses to build these
    assert not is_valid_root(PositiveRoot(2, BarredIndex(1, False)), 2)
    assert not is_valid_root(PositiveRoot(2, BarredIndex(2, True)), 2)
    assert not is_valid_root(PositiveRoot(0, BarredIndex(1, False)), 2)
    with pytest.raises(ValueError):
        make_root(2, 1, False, 2)


def test_path_bound():
    lam = (1, 2)
    a1 = simple_root(1)
    assert path_bound(lam, a1, simple_root(2)) == 3
    assert path_bound(lam, a1, a1) == 1
    assert path_bound(lam, a1, make_root(1, 1, True, 2)) == 3
    assert path_bound(lam, simple_root(2), make_root(2, 2, False, 2)) == 2
    with pytest.raises(ValueError):
        path_bound(lam, make_root(1, 2, False, 2), simple_root(2))


def test_root_json_roundtrip():
    for n in (1, 2, 3, 4):
        for alpha in positive_roots(n):
            assert root_from_json(root_to_json(alpha), n) == alpha


def test_cartan_matrix():
    assert cartan_matrix(2) == ((2, -2), (-1, 2))
    assert cartan_matrix(3) == ((2, -1, 0), (-1, 2, -2), (0, -1, 2))


def test_realization_serre_relations():
    for n in (2, 3):
        real = chevalley_realization(n)
        A = cartan_matrix(n)
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                ef = _bracket(real.e[j], real.f[k])
                if j != k:
                    assert all(all(x == 0 for x in row) for row in ef)
                he = _bracket(real.h[j], real.e[k])
                ratio = _proportionality(he, real.e[k])
                assert ratio == A[j - 1][k - 1]
                hf = _bracket(real.h[j], real.f[k])
                ratio = _proportionality(hf, real.f[k])
                assert ratio == -A[j - 1][k - 1]


def test_realization_preserves_skew_form():
    for n in (2, 3, 4):
        real = chevalley_realization(n)
        J = skew_form(n)
        size = 2 * n
        for alpha in positive_roots(n):
            for M in (real.e_root(alpha), real.f_root(alpha)):
                Mt = tuple(tuple(M[c][r] for c in range(size)) for r in range(size))
                left = _mat_mul(Mt, J)
                right = _mat_mul(J, M)
                assert all(
                    left[r][c] + right[r][c] == 0
                    for r in range(size) for c in range(size)
                )


def test_ad_coeff_values():
    real = chevalley_realization(2)
    assert real.ad_coeff(1, make_root(1, 2, False, 2)) == 2
    assert real.ad_coeff(1, make_root(1, 1, True, 2)) == 2
    assert real.ad_coeff(2, make_root(1, 2, False, 2)) == -1
    assert real.ad_coeff(1, simple_root(1)) == 0
    assert real.ad_coeff(2, make_root(1, 1, True, 2)) == 0


def test_ad_root_coeff_support():
    # nonzero exactly when alpha - beta is again a positive root
    for n in (2, 3):
        real = chevalley_realization(n)
        coeff_map = coefficient_root_map(n)
        for alpha in positive_roots(n):
            ca = simple_coefficients(alpha, n)
            for beta in positive_roots(n):
                cb = simple_coefficients(beta, n)
                diff = tuple(a - b for a, b in zip(ca, cb))
                c = real.ad_root_coeff(beta, alpha)
                if diff in coeff_map:
                    assert c != 0, (beta, alpha)
                else:
                    assert c == 0, (beta, alpha)


def test_variable_key_orders_by_row_then_position():
    rng = random.Random(11)
    n = 4
    roots = positive_roots(n)
    for _ in range(200):
        a, b = rng.choice(roots), rng.choice(roots)
        ka, kb = variable_key(a, n), variable_key(b, n)
        if a.row != b.row:
            assert (ka < kb) == (a.row < b.row)
        else:
            assert (ka < kb) == (index_position(a.col, n) < index_position(b.col, n))


def test_root_index_map_matches_reading_order():
    for n in (1, 2, 3, 4, 5):
        idx = root_index_map(n)
        for i, alpha in enumerate(positive_roots(n)):
            assert idx[alpha] == i
