"""Exterior algebras of finite-dimensional Lie algebras with symplectic data.

A Lie algebra is given by the differentials of its dual generators (the
"signature" notation, e.g. ``(0,0,0,0,12,14+25)`` reads d e^5 = e^1∧e^2,
d e^6 = e^1∧e^4 + e^2∧e^5).  The differential extends as an odd derivation;
d^2 = 0 is exactly the Jacobi identity and is checked, never assumed.

Given a closed nondegenerate 2-form the module builder assembles the wedge
operator L, the contraction Λ with the dual bivector, the counting operator
H, the codifferential delta = [Λ, d], and the star involution solved degree
by degree from the pairing α ∧ ⋆β = λ^k(α, β) ω^m / m!.  Form degree k
corresponds to module weight k - m; that translation lives here and nowhere
else.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .exactlin import Matrix, invert
from .superalg import GradedModule

MAX_GENERATORS = 9  # two-digit pair grammar: indices are single digits 1..9


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class ValidationError(ValueError):
    pass


# ---------------------------------------------------------------------------
# forms


def mask_indices(mask: int) -> tuple[int, ...]:
    """1-based generator indices in a basis subset bitmask, ascending."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def indices_mask(indices) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << (i - 1)
    return mask


def _merge_sign(a: int, b: int) -> int:
    """Sign of sorting the concatenation of the (sorted) index sets a, b."""
    sign = 1
    for i in mask_indices(b):
        higher = a >> i  # bits of a strictly above i
        if bin(higher).count("1") % 2:
            sign = -sign
    return sign


class Form:
    """Element of the exterior algebra: sparse map basis-subset -> rational."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[dict[int, Fraction]] = None):
        self.terms = {}
        if terms:
            for mask, c in terms.items():
                c = Fraction(c)
                if c != 0:
                    self.terms[mask] = c

    @classmethod
    def zero(cls) -> "Form":
        return cls()

    @classmethod
    def one(cls) -> "Form":
        return cls({0: Fraction(1)})

    @classmethod
    def generator(cls, i: int) -> "Form":
        return cls({1 << (i - 1): Fraction(1)})

    @classmethod
    def term(cls, indices, coeff=1) -> "Form":
        """Wedge of distinct generators in the given order, times coeff."""
        seen = 0
        sign = 1
        for i in indices:
            bit = 1 << (i - 1)
            if seen & bit:
                return cls.zero()
            sign *= _merge_sign(seen, bit)
            seen |= bit
        return cls({seen: Fraction(coeff) * sign})

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> Optional[int]:
        """Common degree of all terms, None for zero or mixed forms."""
        degs = {bin(m).count("1") for m in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def coeff(self, mask: int) -> Fraction:
        return self.terms.get(mask, Fraction(0))

    def __add__(self, other: "Form") -> "Form":
        out = dict(self.terms)
        for mask, c in other.terms.items():
            out[mask] = out.get(mask, Fraction(0)) + c
        return Form(out)

    def __sub__(self, other: "Form") -> "Form":
        out = dict(self.terms)
        for mask, c in other.terms.items():
            out[mask] = out.get(mask, Fraction(0)) - c
        return Form(out)

    def scale(self, c) -> "Form":
        c = Fraction(c)
        return Form({m: c * x for m, x in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, Form) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"Form({render_form(self)!r})"


def wedge(a: Form, b: Form) -> Form:
    out: dict[int, Fraction] = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            if ma & mb:
                continue
            m = ma | mb
            c = ca * cb * _merge_sign(ma, mb)
            out[m] = out.get(m, Fraction(0)) + c
    return Form(out)


def contract_generator(i: int, a: Form) -> Form:
    """Interior product with the generator dual to e^i: the form is evaluated
    with X_i inserted in the first slot."""
    bit = 1 << (i - 1)
    out: dict[int, Fraction] = {}
    for mask, c in a.terms.items():
        if not (mask & bit):
            continue
        below = bin(mask & (bit - 1)).count("1")
        sign = -1 if below % 2 else 1
        m = mask & ~bit
        out[m] = out.get(m, Fraction(0)) + c * sign
    return Form(out)


# ---------------------------------------------------------------------------
# signature grammar


@dataclass(frozen=True)
class LiePresentation:
    """Differentials of the dual generators; dim = generator count."""
    dim: int
    diff: tuple[Form, ...]  # diff[i-1] = d e^i, a 2-form (or zero)

    def d_generator(self, i: int) -> Form:
        return self.diff[i - 1]


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        self.skip_ws()
        ch = self.text[self.pos] if self.pos < len(self.text) else ""
        self.pos += 1
        return ch


def _parse_term(sc: _Scanner, dim: int, sign: int) -> Form:
    start = sc.pos
    digits = []
    while sc.peek().isdigit():
        digits.append(sc.take())
    if not digits:
        raise ParseError(f"expected a term, got {sc.peek()!r}", sc.pos)
    if sc.peek() in ("x", "*"):
        sc.take()
        coeff = int("".join(digits))
        if coeff <= 0:
            raise ParseError("scale coefficient must be a positive integer", start)
        digits = []
        while sc.peek().isdigit():
            digits.append(sc.take())
    else:
        coeff = 1
    if len(digits) != 2:
        raise ParseError("an index pair is exactly two digits", start)
    a, b = int(digits[0]), int(digits[1])
    if a == b:
        raise ParseError(f"repeated index {a} in pair", start)
    for idx in (a, b):
        if idx < 1 or idx > dim:
            raise ParseError(f"index {idx} outside 1..{dim}", start)
    # pair "ab" with a > b is -(e^b ∧ e^a)
    return Form.term((a, b), coeff * sign)


def _parse_expr(sc: _Scanner, dim: int) -> Form:
    """expr := [sign] term (sign term)* ; term := [coeff (x|*)] pair."""
    total = Form.zero()
    sign = 1
    ch = sc.peek()
    if ch in ("+", "-"):
        sc.take()
        sign = -1 if ch == "-" else 1
    while True:
        total = total + _parse_term(sc, dim, sign)
        ch = sc.peek()
        if ch in ("+", "-"):
            sc.take()
            sign = -1 if ch == "-" else 1
            continue
        return total


def parse_form(text: str, dim: int) -> Form:
    """Parse a 2-form expression like ``16+2x34-25`` over dim generators."""
    if dim > MAX_GENERATORS:
        raise ValidationError(
            f"the two-digit grammar supports at most {MAX_GENERATORS} generators")
    sc = _Scanner(text)
    if sc.peek() == "0":
        sc.take()
        if sc.peek():
            raise ParseError("unexpected input after 0", sc.pos)
        return Form.zero()
    form = _parse_expr(sc, dim)
    if sc.peek():
        raise ParseError(f"unexpected input {sc.peek()!r}", sc.pos)
    return form


def parse_signature(text: str) -> LiePresentation:
    """Parse ``(entry,entry,...)``; entry i gives d e^i (``0`` or a 2-form)."""
    stripped = text.strip()
    if not stripped.startswith("("):
        raise ParseError("signature must start with '('", 0)
    if not stripped.endswith(")"):
        raise ParseError("signature must end with ')'", len(text) - 1)
    body = stripped[1:-1]
    entries_text = body.split(",")
    dim = len(entries_text)
    if dim > MAX_GENERATORS:
        raise ValidationError(
            f"the two-digit grammar supports at most {MAX_GENERATORS} generators")
    diffs = []
    for pos, entry in enumerate(entries_text):
        if entry.strip() == "":
            raise ParseError(f"empty signature entry #{pos + 1}", text.find(entry))
        diffs.append(parse_form(entry, dim))
    for i, f in enumerate(diffs):
        if not f.is_zero() and f.degree() != 2:
            raise ValidationError(f"entry {i + 1} is not a 2-form")
    return LiePresentation(dim=dim, diff=tuple(diffs))


def render_form(f: Form) -> str:
    """Canonical text: terms ordered by index pair, unit coefficients bare."""
    if f.is_zero():
        return "0"
    items = sorted(f.terms.items(), key=lambda kv: mask_indices(kv[0]))
    parts = []
    for mask, c in items:
        idx = mask_indices(mask)
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = abs(c)
        coeff = "" if mag == 1 else f"{mag}x"
        parts.append(f"{sign}{coeff}{''.join(str(i) for i in idx)}")
    return "".join(parts)


def render_signature(p: LiePresentation) -> str:
    return "(" + ",".join(render_form(f) for f in p.diff) + ")"


# ---------------------------------------------------------------------------
# the Chevalley-Eilenberg differential


def degree_basis(dim: int, k: int) -> list[int]:
    """Basis masks of Λ^k in ascending mask order (the fixed convention);
    empty outside 0..dim."""
    if k < 0 or k > dim:
        return []
    return [m for m in range(1 << dim) if bin(m).count("1") == k]


def d_form(p: LiePresentation, a: Form) -> Form:
    """Odd-derivation extension of the generator differentials."""
    out = Form.zero()
    for mask, c in a.terms.items():
        idx = mask_indices(mask)
        for pos, i in enumerate(idx):
            di = p.d_generator(i)
            if di.is_zero():
                continue
            rest = mask & ~(1 << (i - 1))
            sgn = -1 if pos % 2 else 1
            out = out + wedge(di, Form({rest: Fraction(1)})).scale(c * sgn)
    return out


def form_to_vec(f: Form, basis: list[int]) -> list[Fraction]:
    pos = {m: j for j, m in enumerate(basis)}
    v = [Fraction(0)] * len(basis)
    for mask, c in f.terms.items():
        if mask not in pos:
            raise ValueError("form does not live in the given graded piece")
        v[pos[mask]] = c
    return v


def vec_to_form(vec, basis: list[int]) -> Form:
    return Form({m: Fraction(x) for m, x in zip(basis, vec)})


def operator_matrix(dim: int, k_src: int, k_tgt: int, op) -> Matrix:
    """Matrix of a linear map Λ^{k_src} -> Λ^{k_tgt} given on forms."""
    src = degree_basis(dim, k_src)
    tgt = degree_basis(dim, k_tgt)
    cols = [form_to_vec(op(Form({mask: Fraction(1)})), tgt) for mask in src]
    return Matrix.from_cols(cols, nrows=len(tgt))


def ce_differential(p: LiePresentation) -> list[Matrix]:
    """Matrices of d: Λ^k -> Λ^{k+1} for k = 0..dim (the top one has 0 rows)."""
    return [operator_matrix(p.dim, k, k + 1, lambda a: d_form(p, a))
            for k in range(p.dim + 1)]


def check_d_squared(p: LiePresentation) -> list[int]:
    """Generators on which d^2 fails; empty iff p is a Lie coalgebra
    differential (the Jacobi identity)."""
    return [i for i in range(1, p.dim + 1)
            if not d_form(p, p.d_generator(i)).is_zero()]


def ce_betti(p: LiePresentation) -> list[int]:
    """Cohomology dimensions of the CE complex, k = 0..dim."""
    from .exactlin import kernel, rank
    mats = ce_differential(p)
    out = []
    for k in range(p.dim + 1):
        closed = kernel(mats[k]).dim
        exact = rank(mats[k - 1]) if k >= 1 else 0
        out.append(closed - exact)
    return out


# ---------------------------------------------------------------------------
# symplectic structure


@dataclass(frozen=True)
class SymplecticStructure:
    omega: Form
    m: int
    gram: Matrix       # gram[i][j] = omega(X_{i+1}, X_{j+1})
    gram_inv: Matrix   # coefficients of the dual bivector

    def lam_pair(self, i: int, j: int) -> Fraction:
        """Pairing of e^i with e^j induced by the dual bivector."""
        return self.gram_inv.data[j - 1][i - 1]


def check_symplectic(p: LiePresentation, w: Form) -> SymplecticStructure:
    """Validate closedness and nondegeneracy; invert the Gram matrix."""
    if p.dim % 2 != 0:
        raise ValidationError("symplectic structure needs an even-dimensional algebra")
    if w.is_zero() or w.degree() != 2:
        raise ValidationError("the symplectic candidate must be a nonzero 2-form")
    if not d_form(p, w).is_zero():
        raise ValidationError("the 2-form is not closed")
    m = p.dim // 2
    gram = Matrix.zeros(p.dim, p.dim)
    for mask, c in w.terms.items():
        i, j = mask_indices(mask)
        gram.data[i - 1][j - 1] = c
        gram.data[j - 1][i - 1] = -c
    top = w
    for _ in range(m - 1):
        top = wedge(top, w)
    if top.is_zero():
        raise ValidationError("the 2-form is degenerate (omega^m = 0)")
    try:
        gram_inv = invert(gram)
    except ValueError:
        raise ValidationError("the 2-form is degenerate (singular Gram matrix)")
    return SymplecticStructure(omega=w, m=m, gram=gram, gram_inv=gram_inv)


def contract_dual_bivector(s: SymplecticStructure, a: Form) -> Form:
    """Contraction with the bivector dual to omega, normalized so that
    omega contracts to m (the Kähler-Weil anchor)."""
    out = Form.zero()
    inv = s.gram_inv
    dim = inv.rows
    for i in range(1, dim + 1):
        for j in range(i + 1, dim + 1):
            c = inv.data[i - 1][j - 1]
            if c == 0:
                continue
            out = out + contract_generator(i, contract_generator(j, a)).scale(c)
    return out


def contract(x: Union[int, SymplecticStructure], a: Form) -> Form:
    """Interior product with a generator (by index) or the dual bivector."""
    if isinstance(x, SymplecticStructure):
        return contract_dual_bivector(x, a)
    return contract_generator(x, a)


def _det(grid) -> Fraction:
    n = len(grid)
    g = [row[:] for row in grid]
    det = Fraction(1)
    for col in range(n):
        piv = None
        for r in range(col, n):
            if g[r][col] != 0:
                piv = r
                break
        if piv is None:
            return Fraction(0)
        if piv != col:
            g[col], g[piv] = g[piv], g[col]
            det = -det
        det *= g[col][col]
        inv = Fraction(1) / g[col][col]
        for r in range(col + 1, n):
            f = g[r][col] * inv
            if f != 0:
                g[r] = [a - f * b for a, b in zip(g[r], g[col])]
    return det


def lambda_pairing(s: SymplecticStructure, amask: int, bmask: int) -> Fraction:
    """Gram-determinant extension of the bivector pairing to k-forms."""
    ai = mask_indices(amask)
    bi = mask_indices(bmask)
    k = len(ai)
    if k == 0:
        return Fraction(1)
    return _det([[s.lam_pair(ai[r], bi[c]) for c in range(k)] for r in range(k)])


def build_star(s: SymplecticStructure, dim: int) -> dict[int, Matrix]:
    """Solve α ∧ ⋆β = λ^k(α, β) ω^m / m! degree by degree.

    The top pairing Λ^k × Λ^{2m-k} -> Λ^{2m} is perfect, so each ⋆β is
    uniquely determined.  Returns matrices Λ^k -> Λ^{2m-k} keyed by k.
    """
    m = s.m
    top = Form.one()
    for _ in range(m):
        top = wedge(top, s.omega)
    top_coeff = top.coeff((1 << dim) - 1) / math.factorial(m)
    star = {}
    for k in range(dim + 1):
        src = degree_basis(dim, k)
        tgt = degree_basis(dim, dim - k)
        pair = Matrix.zeros(len(src), len(tgt))
        for r, amask in enumerate(src):
            for c, gmask in enumerate(tgt):
                if amask & gmask:
                    continue
                pair.data[r][c] = Fraction(_merge_sign(amask, gmask))
        pair_inv = invert(pair)
        cols = []
        for bmask in src:
            rhs = [lambda_pairing(s, amask, bmask) * top_coeff for amask in src]
            cols.append(pair_inv.apply(rhs))
        star[k] = Matrix.from_cols(cols, nrows=len(tgt))
    return star


# ---------------------------------------------------------------------------
# module builders


def build_operators(s: SymplecticStructure, p: LiePresentation) -> GradedModule:
    """GradedModule of the full exterior algebra: e = L, f = Λ, h = H,
    d = the CE differential, delta = [Λ, d], star from the pairing."""
    dim, m = p.dim, s.m
    weights = {k - m: len(degree_basis(dim, k)) for k in range(dim + 1)}
    e_mats, f_mats, h_mats, d_mats, delta_mats, star_mats = {}, {}, {}, {}, {}, {}
    star_by_degree = build_star(s, dim)
    for k in range(dim + 1):
        i = k - m
        e_mats[i] = operator_matrix(dim, k, k + 2, lambda a: wedge(s.omega, a))
        f_mats[i] = operator_matrix(dim, k, k - 2,
                                    lambda a: contract_dual_bivector(s, a))
        h_mats[i] = Matrix.identity(len(degree_basis(dim, k))).scale(i)
        d_mats[i] = operator_matrix(dim, k, k + 1, lambda a: d_form(p, a))
        delta_mats[i] = operator_matrix(
            dim, k, k - 1,
            lambda a: contract_dual_bivector(s, d_form(p, a))
            - d_form(p, contract_dual_bivector(s, a)))
        star_mats[i] = star_by_degree[k]
    return GradedModule(
        n=m, weights=weights,
        ops={"e": e_mats, "f": f_mats, "h": h_mats, "d": d_mats, "delta": delta_mats},
        star=star_mats,
    )


@dataclass(frozen=True)
class Representation:
    """Finite-dimensional module over the Lie algebra: one matrix per
    generator, required to be flat (respect the brackets)."""
    fiber_dim: int
    action: tuple[Matrix, ...]  # action[i-1] = rho(X_i)

    def rho(self, i: int) -> Matrix:
        return self.action[i - 1]


def bracket_coefficients(p: LiePresentation, i: int, j: int) -> dict[int, Fraction]:
    """[X_i, X_j] = sum_k c_k X_k read off the signature: the CE convention
    (d eta)(X, Y) = -eta([X, Y]) gives c_k = -(coeff of e^i∧e^j in d e^k)."""
    out = {}
    mask = indices_mask((i, j))
    for k in range(1, p.dim + 1):
        c = p.d_generator(k).coeff(mask)
        if c != 0:
            out[k] = -c
    return out


def validate_flat(p: LiePresentation, rep: Representation) -> None:
    """Raises ValidationError naming the first generator pair whose bracket
    identity rho(X_i)rho(X_j) - rho(X_j)rho(X_i) = rho([X_i, X_j]) fails."""
    if len(rep.action) != p.dim:
        raise ValidationError("representation needs one matrix per generator")
    n = rep.fiber_dim
    for mat in rep.action:
        if mat.rows != n or mat.cols != n:
            raise ValidationError(
                "representation matrices must be square of the fiber dimension")
    for i in range(1, p.dim + 1):
        for j in range(i + 1, p.dim + 1):
            lhs = rep.rho(i) @ rep.rho(j) - rep.rho(j) @ rep.rho(i)
            rhs = Matrix.zeros(n, n)
            for k, c in bracket_coefficients(p, i, j).items():
                rhs = rhs + rep.rho(k).scale(c)
            if lhs != rhs:
                raise ValidationError(
                    f"connection is not flat: curvature on generator pair ({i},{j})")


def with_coefficients(s: SymplecticStructure, p: LiePresentation,
                      rep: Representation) -> GradedModule:
    """GradedModule on Λ^k ⊗ E with the coupled differential
    d(α ⊗ v) = (dα) ⊗ v + Σ_j (e^j ∧ α) ⊗ ρ(X_j) v and delta = [Λ, d].

    Basis convention: (mask, fiber index), mask-major.  No star: the pairing
    construction needs a self-dual fiber, which is not assumed.
    """
    validate_flat(p, rep)
    dim, m, fd = p.dim, s.m, rep.fiber_dim
    base = build_operators(s, p)

    def tensor_id(mat: Matrix) -> Matrix:
        out = Matrix.zeros(mat.rows * fd, mat.cols * fd)
        for r in range(mat.rows):
            for c in range(mat.cols):
                x = mat.data[r][c]
                if x != 0:
                    for t in range(fd):
                        out.data[r * fd + t][c * fd + t] = x
        return out

    weights = {i: base.dim(i) * fd for i in range(-m, m + 1)}
    e_mats = {i: tensor_id(base.op_mat("e", i)) for i in range(-m, m + 1)}
    f_mats = {i: tensor_id(base.op_mat("f", i)) for i in range(-m, m + 1)}
    h_mats = {i: Matrix.identity(weights[i]).scale(i) for i in range(-m, m + 1)}

    d_mats = {}
    for k in range(dim + 1):
        i = k - m
        src = degree_basis(dim, k)
        tgt = degree_basis(dim, k + 1)
        mat = tensor_id(base.op_mat("d", i))
        if tgt:
            tpos = {mk: idx for idx, mk in enumerate(tgt)}
            for cidx, mk in enumerate(src):
                for j in range(1, dim + 1):
                    rho = rep.rho(j)
                    wf = wedge(Form.generator(j), Form({mk: Fraction(1)}))
                    for wmask, wc in wf.terms.items():
                        ridx = tpos[wmask]
                        for a in range(fd):
                            for b in range(fd):
                                x = rho.data[a][b]
                                if x != 0:
                                    mat.data[ridx * fd + a][cidx * fd + b] += wc * x
        d_mats[i] = mat

    delta_mats = {}
    for i in range(-m, m + 1):
        tgt_dim = weights.get(i - 1, 0)
        part1 = f_mats[i + 1] @ d_mats[i] if i + 1 <= m \
            else Matrix.zeros(tgt_dim, weights[i])
        part2 = d_mats[i - 2] @ f_mats[i] if i - 2 >= -m \
            else Matrix.zeros(tgt_dim, weights[i])
        delta_mats[i] = part1 - part2
    return GradedModule(
        n=m, weights=weights,
        ops={"e": e_mats, "f": f_mats, "h": h_mats, "d": d_mats, "delta": delta_mats},
        star=None,
    )
