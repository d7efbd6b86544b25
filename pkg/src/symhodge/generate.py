"""Seeded source of random valid symplectic presentations.

Random abstract (d, delta) pairs satisfying the superalgebra relations are
as hard to produce as the theory itself, so randomness goes through the
geometric constructor instead: nilpotent signatures with strictly
lower-triangular differentials (d e^j only uses indices below j), filtered
by d^2 = 0, with the 2-form sampled from the integer kernel of d on
2-forms (closed by construction) and filtered by nondegeneracy.  Abelian
draws are mixed in so the positive branch of the equivalence theorems is
exercised, and the sampler falls back to the abelian baseline when a draw
refuses to produce a valid pair, so a fixed seed always yields exactly the
requested number of entries.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from .catalog import CatalogEntry
from .cealg import (
    Form,
    LiePresentation,
    check_d_squared,
    check_symplectic,
    d_form,
    degree_basis,
    parse_form,
    parse_signature,
    render_form,
    render_signature,
    vec_to_form,
)
from .exactlin import Matrix, kernel

_STANDARD_OMEGA = {2: "12", 4: "12+34", 6: "12+34+56"}


def _random_nilpotent(rng: random.Random, dim: int, tries: int = 40) -> LiePresentation:
    """Strictly lower-triangular signature with d^2 = 0; abelian fallback."""
    pairs_below = {j: [(a, b) for a in range(1, j) for b in range(a + 1, j)]
                   for j in range(1, dim + 1)}
    for _ in range(tries):
        diffs = []
        for j in range(1, dim + 1):
            form = Form.zero()
            for (a, b) in pairs_below[j]:
                if rng.random() < 0.30:
                    coeff = rng.choice((-2, -1, 1, 1, 2))
                    form = form + Form.term((a, b), coeff)
            diffs.append(form)
        pres = LiePresentation(dim=dim, diff=tuple(diffs))
        if not check_d_squared(pres):
            return pres
    return parse_signature("(" + ",".join(["0"] * dim) + ")")


def _random_symplectic_form(rng: random.Random, pres: LiePresentation,
                            tries: int = 25):
    """Integer combination of a basis of closed 2-forms, nondegenerate."""
    dim = pres.dim
    basis2 = degree_basis(dim, 2)
    basis3 = degree_basis(dim, 3)
    cols = []
    for mask in basis2:
        img = d_form(pres, Form({mask: Fraction(1)}))
        col = [Fraction(0)] * len(basis3)
        pos = {m: i for i, m in enumerate(basis3)}
        for mk, c in img.terms.items():
            col[pos[mk]] = c
        cols.append(col)
    closed = kernel(Matrix.from_cols(cols, nrows=len(basis3)))
    if closed.dim == 0:
        return None
    for _ in range(tries):
        coeffs = [rng.randint(-2, 2) for _ in range(closed.dim)]
        if not any(coeffs):
            continue
        vec = [Fraction(0)] * len(basis2)
        for c, bvec in zip(coeffs, closed.basis):
            if c:
                vec = [x + c * y for x, y in zip(vec, bvec)]
        denom = 1
        for x in vec:
            denom = denom * x.denominator // math.gcd(denom, x.denominator)
        w = vec_to_form([x * denom for x in vec], basis2)
        if w.is_zero():
            continue
        try:
            check_symplectic(pres, w)
        except ValueError:
            continue
        return w
    return None


def random_entries(seed: int, count: int,
                   dims: tuple[int, ...] = (2, 4, 4, 6, 6)) -> list[CatalogEntry]:
    """Deterministic list of `count` valid catalog entries for the seed."""
    rng = random.Random(seed)
    out = []
    for idx in range(count):
        dim = rng.choice(dims)
        if rng.random() < 0.15:
            pres = parse_signature("(" + ",".join(["0"] * dim) + ")")
        else:
            pres = _random_nilpotent(rng, dim)
        w = _random_symplectic_form(rng, pres)
        if w is None:
            pres = parse_signature("(" + ",".join(["0"] * dim) + ")")
            w = parse_form(_STANDARD_OMEGA[dim], dim)
        out.append(CatalogEntry(
            name=f"rand-{seed}-{idx:03d}",
            signature=render_signature(pres),
            omega=render_form(w),
            group="random",
        ))
    return out
