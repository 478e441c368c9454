"""Tensor-space realization of the simple modules and their PBW filtration.

V(lambda) is realized as the cyclic span of the highest vector inside a
tensor product of exterior powers of the standard 2n-dimensional space,
one factor Lambda^i for each unit of m_i, with highest vector
e_1 ^ ... ^ e_i in each factor.  Root vectors act through the matrix
realization, so every computation here is independent of the polytope
and straightening machinery and serves as a cross-check for both.
"""

from __future__ import annotations

from bisect import bisect_left
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import NamedTuple

from .linalg import IncrementalBasis
from .polytope import enumerate_points
from .rootsys import (
    chevalley_realization,
    positive_roots,
    root_index_map,
    validate_weight,
    variable_key,
)


class RepresentationSpace(NamedTuple):
    """A highest-weight module with weight and PBW-level tags per basis vector."""

    n: int
    lam: tuple
    slots: tuple  # exterior-power sizes of the tensor factors
    basis_vectors: list  # raw spanning vectors, in discovery order
    weight_tags: list  # weight offset of each basis vector (simple-root coords)
    level_tags: list  # minimal number of lowering operators reaching it
    basis: IncrementalBasis

    @property
    def dimension(self) -> int:
        return len(self.basis_vectors)


# ---------------------------------------------------------------------------
# lowering operators on wedge tensors
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _lowering_columns(n: int) -> dict:
    """Sparse columns of every f_alpha matrix: {alpha: {letter: ((letter, c), ...)}}."""
    realization = chevalley_realization(n)
    out = {}
    for alpha in positive_roots(n):
        mat = realization.f_root(alpha)
        cols = {}
        for a in range(2 * n):
            entries = tuple((b + 1, mat[b][a]) for b in range(2 * n) if mat[b][a])
            if entries:
                cols[a + 1] = entries
        out[alpha] = cols
    return out


def _slot_images(cols, slot: tuple) -> list:
    """One derivation step on a single wedge factor, with signs."""
    out = []
    for p, a in enumerate(slot):
        for b, c in cols.get(a, ()):
            if b in slot:
                continue
            rest = slot[:p] + slot[p + 1:]
            pos = bisect_left(rest, b)
            sign = -1 if (p + pos) % 2 else 1
            out.append((rest[:pos] + (b,) + rest[pos:], sign * c))
    return out


def apply_root_vector(n: int, alpha, vec: dict) -> dict:
    """Act by f_alpha as a derivation across all tensor slots of vec."""
    cols = _lowering_columns(n)[alpha]
    out = {}
    for key, coeff in vec.items():
        for t, slot in enumerate(key):
            for new_slot, c in _slot_images(cols, slot):
                new_key = key[:t] + (new_slot,) + key[t + 1:]
                val = out.get(new_key, 0) + coeff * c
                if val:
                    out[new_key] = val
                elif new_key in out:
                    del out[new_key]
    return out


# ---------------------------------------------------------------------------
# weights
# ---------------------------------------------------------------------------

def _key_epsilon(key: tuple, n: int) -> tuple:
    """Weight of a wedge-tensor basis key in orthogonal coordinates."""
    eps = [0] * n
    for slot in key:
        for a in slot:
            if a <= n:
                eps[a - 1] += 1
            else:
                eps[2 * n - a] -= 1
    return tuple(eps)


def _weight_offset(lam, eps: tuple) -> tuple:
    """Simple-root coordinates of lambda - eps for a weight eps of V(lambda)."""
    n = len(lam)
    lam_eps = [sum(lam[k:]) for k in range(n)]
    diff = [lam_eps[k] - eps[k] for k in range(n)]
    offset = []
    total = 0
    for k in range(n - 1):
        total += diff[k]
        offset.append(total)
    last = total + diff[n - 1]
    assert last >= 0 and last % 2 == 0
    offset.append(last // 2)
    assert all(x >= 0 for x in offset)
    return tuple(offset)


def _vector_offset(lam, vec: dict) -> tuple:
    """Weight offset of a weight vector; all keys must agree."""
    n = len(lam)
    keys = iter(vec)
    first = _weight_offset(lam, _key_epsilon(next(keys), n))
    assert all(_weight_offset(lam, _key_epsilon(k, n)) == first for k in keys)
    return first


# ---------------------------------------------------------------------------
# module construction
# ---------------------------------------------------------------------------

def build_module(lam, cap: int = 20000) -> RepresentationSpace:
    """Close the highest vector under all lowering operators, level by level."""
    lam = validate_weight(lam)
    n = len(lam)
    ambient = 1
    for i, m in enumerate(lam, start=1):
        ambient *= comb(2 * n, i) ** m
    if ambient > cap:
        raise ValueError(f"ambient dimension {ambient} exceeds cap {cap}")
    slots = tuple(i for i, m in enumerate(lam, start=1) for _ in range(m))
    start = {tuple(tuple(range(1, i + 1)) for i in slots): Fraction(1)}
    basis = IncrementalBasis(track_combinations=True)
    basis.add(start)
    space = RepresentationSpace(
        n, lam, slots, [start], [(0,) * n], [0], basis)
    roots = positive_roots(n)
    frontier = [start]
    level = 0
    while frontier:
        level += 1
        grown = []
        for vec in frontier:
            for alpha in roots:
                image = apply_root_vector(n, alpha, vec)
                if not image or basis.contains(image):
                    continue
                basis.add(image)
                space.basis_vectors.append(image)
                space.weight_tags.append(_vector_offset(lam, image))
                space.level_tags.append(level)
                grown.append(image)
        frontier = grown
    return space


def pbw_filtration_dims(lam, cap: int = 20000, space: RepresentationSpace | None = None) -> dict:
    """Graded dimensions {(weight offset, level): dim} of the PBW filtration."""
    if space is None:
        space = build_module(lam, cap)
    table = Counter()
    for offset, level in zip(space.weight_tags, space.level_tags):
        table[(offset, level)] += 1
    return dict(table)


def graded_action(lam, cap: int = 20000, space: RepresentationSpace | None = None) -> dict:
    """Matrices {alpha: {src: {dst: c}}} of the f_alpha on the associated graded module.

    Basis vector j of level d maps into the level d+1 slice; components of
    lower level project away in the graded quotient.
    """
    if space is None:
        space = build_module(lam, cap)
    n = space.n
    levels = space.level_tags
    action = {}
    for alpha in positive_roots(n):
        mat = {}
        for j, vec in enumerate(space.basis_vectors):
            image = apply_root_vector(n, alpha, vec)
            if not image:
                continue
            combo = space.basis.combination(image)
            assert combo is not None, "module is not closed under lowering"
            column = {}
            for i, c in combo.items():
                assert levels[i] <= levels[j] + 1
                if levels[i] == levels[j] + 1:
                    column[i] = c
            if column:
                mat[j] = column
        action[alpha] = mat
    return action


def compose_action(outer: dict, inner: dict) -> dict:
    """Composite of two sparse action matrices (inner applied first)."""
    out = {}
    for src, mid_col in inner.items():
        column = {}
        for mid, c in mid_col.items():
            for dst, x in outer.get(mid, {}).items():
                val = column.get(dst, 0) + c * x
                if val:
                    column[dst] = val
                elif dst in column:
                    del column[dst]
        if column:
            out[src] = column
    return out


def apply_action(mat: dict, vec: dict) -> dict:
    """A sparse action matrix applied to a coordinate vector {index: c}."""
    out = {}
    for src, c in vec.items():
        for dst, x in mat.get(src, {}).items():
            val = out.get(dst, 0) + c * x
            if val:
                out[dst] = val
            elif dst in out:
                del out[dst]
    return out


# ---------------------------------------------------------------------------
# ordered monomials in the unfiltered module
# ---------------------------------------------------------------------------

def monomial_vector(space: RepresentationSpace, s, reverse: bool = False) -> dict:
    """f^s applied to the highest vector, factors in decreasing variable order.

    reverse=True applies the opposite order, as a witness that spanning
    ranks do not depend on the chosen order of factors.
    """
    n = space.n
    order = sorted(positive_roots(n), key=lambda alpha: variable_key(alpha, n))
    if reverse:
        order.reverse()
    index = root_index_map(n)
    vec = space.basis_vectors[0]
    for alpha in order:  # rightmost (smallest) factor acts first
        for _ in range(s[index[alpha]]):
            vec = apply_root_vector(n, alpha, vec)
            if not vec:
                return {}
    return vec


def monomial_rank(lam, cap: int = 20000, reverse: bool = False) -> int:
    """Rank of {f^s v : s in S(lambda)} inside the tensor realization."""
    lam = validate_weight(lam)
    space = build_module(lam, cap)
    basis = IncrementalBasis()
    for s in enumerate_points(lam):
        vec = monomial_vector(space, s, reverse=reverse)
        if vec:
            basis.add(vec)
    return basis.rank


# ---------------------------------------------------------------------------
# tensor products of graded modules
# ---------------------------------------------------------------------------

def _apply_pair(mat_left: dict, mat_right: dict, vec: dict) -> dict:
    """One lowering operator on a tensor pair: act on the left plus the right."""
    out = {}
    for (i, j), c in vec.items():
        for i2, x in mat_left.get(i, {}).items():
            key = (i2, j)
            val = out.get(key, 0) + c * x
            if val:
                out[key] = val
            elif key in out:
                del out[key]
        for j2, x in mat_right.get(j, {}).items():
            key = (i, j2)
            val = out.get(key, 0) + c * x
            if val:
                out[key] = val
            elif key in out:
                del out[key]
    return out


def tensor_cartan_dims(lam, mu, cap: int = 20000) -> dict:
    """Graded dimensions of the cyclic span of v_lam (x) v_mu in gr V(lam) (x) gr V(mu).

    Keys are (weight offset, degree) with offsets measured from lam + mu,
    so the table is directly comparable with pbw_filtration_dims(lam + mu).
    """
    lam = validate_weight(lam)
    mu = validate_weight(mu)
    if len(lam) != len(mu):
        raise ValueError("weights live in different ranks")
    n = len(lam)
    left = build_module(lam, cap)
    right = build_module(mu, cap)
    act_left = graded_action(lam, space=left)
    act_right = graded_action(mu, space=right)

    def pair_offset(i: int, j: int) -> tuple:
        return tuple(a + b for a, b in zip(left.weight_tags[i], right.weight_tags[j]))

    basis = IncrementalBasis()
    start = {(0, 0): Fraction(1)}
    basis.add(start)
    table = {((0,) * n, 0): 1}
    roots = positive_roots(n)
    frontier = [start]
    level = 0
    while frontier:
        level += 1
        grown = []
        for vec in frontier:
            for alpha in roots:
                image = _apply_pair(act_left[alpha], act_right[alpha], vec)
                if not image or not basis.add(image):
                    continue
                pairs = iter(image)
                i, j = next(pairs)
                offset = pair_offset(i, j)
                assert left.level_tags[i] + right.level_tags[j] == level
                assert all(pair_offset(*p) == offset for p in pairs)
                table[offset, level] = table.get((offset, level), 0) + 1
                grown.append(image)
        frontier = grown
    return table
