"""Tensor modules: twisted Laurent modules tensored with a finite gl_n module.

Elements live in P (x) V where P is the rank-one twisted Laurent module
(exponents s, Euler eigenvalues s_i - t_i) and V is a FinModule. Two
actions of the torus vector fields are implemented:

- style "direct":   D(u,r).(z (x) y) = (D(u,r) z) (x) y + x^r z (x) (r u^T) y,
  defined for divergence-zero fields on any V and for all fields when V
  declares an identity scalar;
- style "shifted":  the monomial field with exponent r - e_j and direction
  e_j acts by (x^{r-e_j} d_j p) (x) w + sum_i r_i (x^{r-e_i} p) (x) E_ij w.

The two are transported into each other by the exponent-by-weight shift
z (x) v -> x^{-weight(v)} z (x) v (to_shifted_form / from_shifted_form),
under which the de Rham map d (wedge with the Euler eigenvalue vector)
corresponds to its shifted variant.

The image of the de Rham map (level k: from exterior k-1 into exterior k)
is spanned by the vectors x^s (x) (shat wedge w) with shat the eigenvalue
vector of x^s; these spans, their kernels, and a quadratic probe that
annihilates exactly the image underpin the verification suites.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import glmod
from .fields import VectorField
from .indices import add, box, dot, sub, unit, zero
from .linalg import SpanBasis, SparseVec
from .rational import ONE, rat, rational
from .weyl import LaurentPoly

STYLE_DIRECT = "direct"
STYLE_SHIFTED = "shifted"


@dataclass(frozen=True)
class Context:
    """Twist of the Laurent factor, finite module, and action style."""

    twist: tuple
    vmod: glmod.FinModule
    style: str = STYLE_DIRECT

    def __post_init__(self):
        if len(self.twist) != self.vmod.n:
            raise ValueError("twist length %d != n=%d" % (len(self.twist), self.vmod.n))
        if self.style not in (STYLE_DIRECT, STYLE_SHIFTED):
            raise ValueError("unknown action style %r" % self.style)

    @property
    def n(self) -> int:
        return self.vmod.n

    def with_vmod(self, vmod) -> "Context":
        return Context(self.twist, vmod, self.style)

    def with_style(self, style) -> "Context":
        return Context(self.twist, self.vmod, style)


def context(twist, vmod, style=STYLE_DIRECT) -> Context:
    return Context(tuple(rat(t) for t in twist), vmod, style)


class TensorElement:
    """Finite sum of terms coeff * x^s (x) key over a fixed context."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: Context, terms=None):
        self.ctx = ctx
        self.terms = {}
        if terms:
            for key, c in terms.items() if isinstance(terms, dict) else terms:
                if c:
                    old = self.terms.get(key)
                    c = c + old if old is not None else c
                    if c:
                        self.terms[key] = c
                    elif old is not None:
                        del self.terms[key]

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def add_term(self, s, vkey, c) -> None:
        if not c:
            return
        key = (s, vkey)
        old = self.terms.get(key)
        c = c + old if old is not None else c
        if c:
            self.terms[key] = c
        elif old is not None:
            del self.terms[key]

    def scaled(self, c) -> "TensorElement":
        c = rat(c)
        if not c:
            return TensorElement(self.ctx)
        return TensorElement(self.ctx, {k: a * c for k, a in self.terms.items()})

    def _check(self, other):
        if self.ctx != other.ctx:
            raise ValueError("mixing tensor elements from different contexts")

    def __add__(self, other):
        self._check(other)
        out = TensorElement(self.ctx, dict(self.terms))
        for key, c in other.terms.items():
            b = out.terms.get(key)
            if b is None:
                out.terms[key] = c
            else:
                b = b + c
                if b:
                    out.terms[key] = b
                else:
                    del out.terms[key]
        return out

    def __sub__(self, other):
        return self + other.scaled(-1)

    def __eq__(self, other):
        return (isinstance(other, TensorElement) and self.ctx == other.ctx
                and self.terms == other.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for (s, vkey), c in sorted(self.terms.items()):
            bits.append("%s x^(%s) (x) %s" % (c, ",".join(str(e) for e in s), vkey or "1"))
        return " + ".join(bits)

    def degrees(self) -> set:
        return {s for (s, _) in self.terms}


def tensor(ctx: Context, p: LaurentPoly, vvec) -> TensorElement:
    """Build p (x) v from a Laurent polynomial and a sparse V-vector."""
    out = TensorElement(ctx)
    for s, a in p.items():
        for vkey, b in vvec.items():
            out.add_term(s, vkey, a * b)
    return out


def basis_element(ctx: Context, s, vkey, coeff=1) -> TensorElement:
    return TensorElement(ctx, {(tuple(s), vkey): rat(coeff)})


# ---------------------------------------------------------------- actions


def act_direct(X: VectorField, m: TensorElement) -> TensorElement:
    """Vector-field action in the direct style."""
    ctx = m.ctx
    if ctx.style != STYLE_DIRECT:
        raise ValueError("direct action on a %s-style element" % ctx.style)
    trace = dot(X.u, X.r)
    if trace and ctx.vmod.id_scalar is None:
        raise ValueError("field with (u|r) != 0 needs an identity scalar on V")
    vmod = ctx.vmod
    twist = ctx.twist
    ru = glmod.rank_one(X.r, X.u)
    out = TensorElement(ctx)
    for (s, vkey), c in m.terms.items():
        t = add(s, X.r)
        c1 = c * (dot(X.u, s) - dot(X.u, twist))
        if c1:
            out.add_term(t, vkey, c1)
        for (i, j), a in ru.items():
            for vkey2, b in vmod.unit_table(i, j)[vkey]:
                out.add_term(t, vkey2, c * a * b)
    return out


def act_monomial(r, m: TensorElement) -> TensorElement:
    """Multiplication action of the Laurent monomial x^r (exponent shift)."""
    r = tuple(r)
    out = TensorElement(m.ctx)
    for (s, vkey), c in m.terms.items():
        out.add_term(add(s, r), vkey, c)
    return out


def act_shifted(j: int, r, m: TensorElement) -> TensorElement:
    """Monomial-field action in the shifted style, indexed by (j, r).

    The acting field is x^{r-e_j} d_j; the shift keeps each summand's
    exponent aligned with the matrix-unit column it multiplies.
    """
    ctx = m.ctx
    if ctx.style != STYLE_SHIFTED:
        raise ValueError("shifted action on a %s-style element" % ctx.style)
    r = tuple(r)
    n = ctx.n
    if not 1 <= j <= n:
        raise ValueError("index %d out of range" % j)
    vmod, twist = ctx.vmod, ctx.twist
    out = TensorElement(ctx)
    ej = unit(j, n)
    for (s, vkey), c in m.terms.items():
        c1 = c * (s[j - 1] - twist[j - 1])
        if c1:
            out.add_term(add(s, sub(r, ej)), vkey, c1)
        for i in range(1, n + 1):
            ri = r[i - 1]
            if not ri:
                continue
            t = add(s, sub(r, unit(i, n)))
            for vkey2, b in vmod.unit_table(i, j)[vkey]:
                out.add_term(t, vkey2, c * ri * b)
    return out


def act_shifted_field(X: VectorField, m: TensorElement) -> TensorElement:
    """A general field D(u, rho) = sum_j u_j x^rho d_j in the shifted style."""
    out = TensorElement(m.ctx)
    n = m.ctx.n
    for j, uj in enumerate(X.u, start=1):
        if uj:
            out = out + act_shifted(j, add(X.r, unit(j, n)), m).scaled(uj)
    return out


def act(X: VectorField, m: TensorElement) -> TensorElement:
    """Style-dispatching field action."""
    if m.ctx.style == STYLE_DIRECT:
        return act_direct(X, m)
    return act_shifted_field(X, m)


# ------------------------------------------------------------ de Rham maps


def _exterior_level(ctx: Context) -> int:
    if ctx.vmod.kind[0] != "exterior":
        raise ValueError("de Rham maps need an exterior-power module, got %r"
                         % (ctx.vmod.kind,))
    return ctx.vmod.kind[1]


def derham_map(m: TensorElement) -> TensorElement:
    """d: p (x) w -> sum_i (d_i p) (x) (e_i wedge w), exterior k -> k+1."""
    ctx = m.ctx
    k = _exterior_level(ctx)
    n = ctx.n
    if ctx.style != STYLE_DIRECT:
        raise ValueError("the unshifted de Rham map needs a direct-style element")
    if k >= n:
        raise ValueError("de Rham map undefined above the top exterior power")
    out_ctx = ctx.with_vmod(glmod.exterior(n, k + 1))
    twist = ctx.twist
    out = TensorElement(out_ctx)
    for (s, vkey), c in m.terms.items():
        for i in range(1, n + 1):
            ci = c * (s[i - 1] - twist[i - 1])
            if not ci:
                continue
            hit = glmod.wedge_key(i, vkey)
            if hit is None:
                continue
            sign, new = hit
            out.add_term(s, new, ci if sign > 0 else -ci)
    return out


def derham_map_shifted(m: TensorElement) -> TensorElement:
    """Shifted-style variant: p (x) w -> sum_i (x^{-e_i} d_i p) (x) (e_i wedge w)."""
    ctx = m.ctx
    k = _exterior_level(ctx)
    n = ctx.n
    if ctx.style != STYLE_SHIFTED:
        raise ValueError("shifted de Rham map needs a shifted-style element")
    if k >= n:
        raise ValueError("de Rham map undefined above the top exterior power")
    out_ctx = ctx.with_vmod(glmod.exterior(n, k + 1))
    twist = ctx.twist
    out = TensorElement(out_ctx)
    for (s, vkey), c in m.terms.items():
        for i in range(1, n + 1):
            ci = c * (s[i - 1] - twist[i - 1])
            if not ci:
                continue
            hit = glmod.wedge_key(i, vkey)
            if hit is None:
                continue
            sign, new = hit
            out.add_term(sub(s, unit(i, n)), new, ci if sign > 0 else -ci)
    return out


def to_shifted_form(m: TensorElement) -> TensorElement:
    """Exponent-by-weight shift p (x) v -> x^{-weight(v)} p (x) v."""
    ctx = m.ctx
    if ctx.style != STYLE_DIRECT:
        raise ValueError("element already in shifted form")
    out = TensorElement(ctx.with_style(STYLE_SHIFTED))
    vmod = ctx.vmod
    for (s, vkey), c in m.terms.items():
        out.add_term(sub(s, vmod.weight_of(vkey)), vkey, c)
    return out


def from_shifted_form(m: TensorElement) -> TensorElement:
    ctx = m.ctx
    if ctx.style != STYLE_SHIFTED:
        raise ValueError("element already in direct form")
    out = TensorElement(ctx.with_style(STYLE_DIRECT))
    vmod = ctx.vmod
    for (s, vkey), c in m.terms.items():
        out.add_term(add(s, vmod.weight_of(vkey)), vkey, c)
    return out


# ---------------------------------------------------- de Rham image spans


def eigen_vector(s, twist) -> list:
    """Euler eigenvalue vector of x^s: (s_1 - t_1, ..., s_n - t_n)."""
    return [si - ti for si, ti in zip(s, twist)]


def derham_image(p: LaurentPoly, wvec, ctx_k: Context) -> TensorElement:
    """d applied to p (x) w, with w over exterior k-1: the image generators.

    ctx_k is the target context (exterior k); on a monomial x^s the result
    is x^s (x) (shat wedge w) with shat the eigenvalue vector of x^s.
    """
    k = _exterior_level(ctx_k)
    if k < 1:
        raise ValueError("image vectors live in exterior level >= 1")
    src = ctx_k.with_vmod(glmod.exterior(ctx_k.n, k - 1))
    return derham_map(tensor(src, p, wvec))


class GradedSpan:
    """Exponent-graded span: one small echelon basis per exponent.

    Sound for every span that arises from weight vectors: distinct
    exponents have distinct joint Euler eigenvalues at every rational
    twist, so graded parts of module elements stay in the module.
    """

    def __init__(self, vdim: int):
        self.vdim = vdim
        self.spans: dict = {}

    def mini(self, s) -> SpanBasis:
        sp = self.spans.get(s)
        if sp is None:
            sp = SpanBasis()
            self.spans[s] = sp
        return sp

    def rank_at(self, s) -> int:
        sp = self.spans.get(s)
        return sp.rank if sp is not None else 0

    def insert(self, s, minivec) -> bool:
        return self.mini(s).insert(minivec)

    def total_rank(self) -> int:
        return sum(sp.rank for sp in self.spans.values())

    def rank_in(self, degrees) -> int:
        return sum(self.rank_at(s) for s in degrees)

    def contains_element(self, m: TensorElement) -> bool:
        split = {}
        for (s, vkey), c in m.terms.items():
            split.setdefault(s, SparseVec())[vkey] = c
        for s, vec in split.items():
            sp = self.spans.get(s)
            if sp is None or not sp.contains(vec):
                return False
        return True

    def rows_at(self, s):
        sp = self.spans.get(s)
        return sp.rows if sp is not None else []

    def to_span_basis(self) -> SpanBasis:
        """Flatten to a single echelon basis over (exponent, key) pairs."""
        flat = SpanBasis()
        for s in sorted(self.spans):
            for row in self.spans[s].rows:
                flat.insert(SparseVec.make({(s, vkey): c for vkey, c in row.items()}))
        return flat


def derham_image_graded(k: int, twist, bound: int, n: int) -> GradedSpan:
    """Graded span of the level-k de Rham image over an exponent window."""
    twist = tuple(rat(t) for t in twist)
    target = glmod.exterior(n, k)
    lower = glmod.exterior(n, k - 1)
    span = GradedSpan(target.dim)
    for s in box(n, bound):
        shat = eigen_vector(s, twist)
        for wkey in lower.keys:
            vec = SparseVec()
            for i, ci in enumerate(shat, start=1):
                if not ci:
                    continue
                hit = glmod.wedge_key(i, wkey)
                if hit is None:
                    continue
                sign, new = hit
                b = vec.get(new, 0) + (ci if sign > 0 else -ci)
                if b:
                    vec[new] = b
                elif new in vec:
                    del vec[new]
            if vec:
                span.insert(s, vec)
    return span


def derham_image_span(k: int, twist, bound: int, n: int) -> SpanBasis:
    """Window span of the level-k de Rham image as a flat echelon basis."""
    return derham_image_graded(k, twist, bound, n).to_span_basis()


def kernel_member(m: TensorElement) -> bool:
    """Membership in the kernel of the de Rham map at the element's level."""
    return derham_map(m).is_zero


def weight_split(m: TensorElement) -> dict:
    """Joint Euler eigenvalue -> graded component of the element."""
    out = {}
    twist = m.ctx.twist
    for (s, vkey), c in m.terms.items():
        eig = tuple(si - ti for si, ti in zip(s, twist))
        comp = out.get(eig)
        if comp is None:
            comp = TensorElement(m.ctx)
            out[eig] = comp
        comp.add_term(s, vkey, c)
    return out


# -------------------------------------------------------------- image probe


def image_probe(i: int, s, m: TensorElement) -> TensorElement:
    """A quadratic probe that annihilates the level-k de Rham image.

    For 1 <= i <= n-2:

      probe_{i,s}(p (x) w) = x^s d_{i+1} p (x) E_{i,i+2} w
                           - x^s d_{i+2} p (x) E_{i,i+1} w
                           + sum_l x^s d_l p (x) E_{l,i+2} E_{i,i+1} w.

    Every summand carries the same x^s factor, so the map is the exponent
    shift by s applied to the s = 0 probe.
    """
    ctx = m.ctx
    n = ctx.n
    if not 1 <= i <= n - 2:
        raise ValueError("probe index %d out of range 1..%d (needs column i+2)"
                         % (i, n - 2))
    s = tuple(s)
    vmod, twist = ctx.vmod, ctx.twist
    out = TensorElement(ctx)
    for (t, vkey), c in m.terms.items():
        base = add(t, s)
        eig = eigen_vector(t, twist)
        c1 = c * eig[i]      # d_{i+1} eigenvalue
        if c1:
            for vkey2, b in vmod.unit_table(i, i + 2)[vkey]:
                out.add_term(base, vkey2, c1 * b)
        c2 = c * eig[i + 1]  # d_{i+2} eigenvalue
        if c2:
            for vkey2, b in vmod.unit_table(i, i + 1)[vkey]:
                out.add_term(base, vkey2, -c2 * b)
        for vkey1, b1 in vmod.unit_table(i, i + 1)[vkey]:
            for l in range(1, n + 1):
                cl = c * eig[l - 1] * b1
                if not cl:
                    continue
                for vkey2, b2 in vmod.unit_table(l, i + 2)[vkey1]:
                    out.add_term(base, vkey2, cl * b2)
    return out
