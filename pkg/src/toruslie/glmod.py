"""Finite-dimensional modules over the matrix Lie algebra gl_n.

Five concrete kinds with exact integer structure constants:

- natural:      column vectors, keys (i,)
- exterior k:   wedge powers, keys = strictly increasing index tuples
- symmetric m:  polynomial degree-m monomials, keys = sorted index tuples
- adjoint:      traceless matrices, keys (i,j) for i != j plus (i,i) for
                the diagonal differences E_ii - E_{i+1,i+1}, i < n
- trivial:      one basis key ()

Matrix units act through unit_apply; the identity matrix acts by the
module's id_scalar (its trace on the natural module scale). A module may
be stripped to a bare traceless-only structure (id_scalar None), in which
case actions of matrices with nonzero trace are rejected upstream.
"""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement

from .linalg import SparseVec
from .rational import ZERO, rat, rational


def _exterior_unit(n, k, i, j, key):
    if i == j:
        return [(key, 1)] if j in key else []
    if j not in key or i in key:
        return []
    p = key.index(j)
    rest = tuple(e for e in key if e != j)
    q = sum(1 for e in rest if e < i)
    new = tuple(sorted(rest + (i,)))
    sign = -1 if (p + q) % 2 else 1
    return [(new, sign)]


def _symmetric_unit(n, m, i, j, key):
    mult = key.count(j)
    if not mult:
        return []
    if i == j:
        return [(key, mult)]
    pos = key.index(j)
    new = tuple(sorted(key[:pos] + key[pos + 1:] + (i,)))
    return [(new, mult)]


def _diag_to_adjoint(diag):
    # traceless diagonal (d_1..d_n) -> coefficients on keys (i,i), i<n
    out = []
    run = 0
    for i, d in enumerate(diag[:-1], start=1):
        run += d
        if run:
            out.append(((i, i), run))
    return out


def _adjoint_matrix(key, n):
    # basis key -> matrix entries {(a,b): coeff}
    i, j = key
    if i != j:
        return {(i, j): 1}
    return {(i, i): 1, (i + 1, i + 1): -1}


def _adjoint_unit(n, _, i, j, key):
    mat = _adjoint_matrix(key, n)
    # commutator [E_ij, mat]
    out = {}
    for (a, b), c in mat.items():
        if j == a:
            out[(i, b)] = out.get((i, b), 0) + c
        if b == i:
            out[(a, j)] = out.get((a, j), 0) - c
    terms = [((a, b), c) for (a, b), c in out.items() if a != b and c]
    diag = [out.get((a, a), 0) for a in range(1, n + 1)]
    terms.extend(_diag_to_adjoint(diag))
    return terms


class FinModule:
    """One of the concrete gl_n module kinds, with cached unit actions."""

    def __init__(self, kind: tuple, n: int, keys, weight_fn, unit_fn, id_scalar):
        self.kind = kind
        self.n = n
        self.keys = tuple(keys)
        self.key_index = {key: i for i, key in enumerate(self.keys)}
        self._weight_fn = weight_fn
        self._unit_fn = unit_fn
        self.id_scalar = id_scalar
        self._tables = {}

    @property
    def dim(self) -> int:
        return len(self.keys)

    def __eq__(self, other):
        return (isinstance(other, FinModule)
                and self.kind == other.kind
                and self.n == other.n
                and self.id_scalar == other.id_scalar)

    def __hash__(self):
        return hash((self.kind, self.n, self.id_scalar))

    def __repr__(self):
        return "FinModule(%s, n=%d, dim=%d)" % ("-".join(map(str, self.kind)), self.n, self.dim)

    def bare(self) -> "FinModule":
        """Same realization without a declared identity scalar."""
        clone = FinModule(self.kind, self.n, self.keys, self._weight_fn,
                          self._unit_fn, None)
        return clone

    def weight_of(self, key) -> tuple:
        """Diagonal weight: the tuple of E_ii eigenvalues on the basis key."""
        return self._weight_fn(key)

    def unit_table(self, i, j) -> dict:
        """key -> [(key2, integer coeff)] for the matrix unit E_ij."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise ValueError("matrix unit E_%d,%d out of range for n=%d" % (i, j, self.n))
        tab = self._tables.get((i, j))
        if tab is None:
            tab = {key: self._unit_fn(self.n, self.kind[1] if len(self.kind) > 1 else None,
                                      i, j, key)
                   for key in self.keys}
            self._tables[(i, j)] = tab
        return tab

    def unit_apply(self, i, j, vec) -> SparseVec:
        """E_ij applied to a sparse vector over the module's keys."""
        tab = self.unit_table(i, j)
        out = SparseVec()
        for key, c in vec.items():
            for key2, a in tab[key]:
                b = out.get(key2, 0) + c * a
                if b:
                    out[key2] = b
                elif key2 in out:
                    del out[key2]
        return out

    def matrix_apply(self, entries, vec) -> SparseVec:
        """A general matrix sum_{ij} entries[(i,j)] E_ij applied to vec."""
        out = SparseVec()
        for (i, j), m in entries.items():
            if m:
                out.add_scaled(m, self.unit_apply(i, j, vec))
        return out

    def character(self) -> tuple:
        """Sorted multiset of diagonal weights; equal for isomorphic kinds."""
        return tuple(sorted(self.weight_of(key) for key in self.keys))

    @property
    def is_minuscule(self) -> bool:
        """True when every off-diagonal unit squares to zero on the module."""
        kind = self.kind[0]
        if kind in ("trivial", "natural", "exterior"):
            return True
        if kind == "symmetric":
            return self.kind[1] <= 1
        return False


def natural(n: int) -> FinModule:
    keys = [(i,) for i in range(1, n + 1)]

    def weight(key):
        return tuple(1 if k == key[0] else 0 for k in range(1, n + 1))

    def unit(n_, _, i, j, key):
        return [((i,), 1)] if key[0] == j else []

    return FinModule(("natural",), n, keys, weight, unit, rational(1))


def exterior(n: int, k: int) -> FinModule:
    if not 0 <= k <= n:
        raise ValueError("exterior power %d out of range 0..%d" % (k, n))
    keys = list(combinations(range(1, n + 1), k))

    def weight(key):
        return tuple(1 if i in key else 0 for i in range(1, n + 1))

    return FinModule(("exterior", k), n, keys, weight, _exterior_unit, rational(k))


def symmetric(n: int, m: int) -> FinModule:
    if m < 0:
        raise ValueError("symmetric power must be nonnegative")
    keys = list(combinations_with_replacement(range(1, n + 1), m))

    def weight(key):
        return tuple(key.count(i) for i in range(1, n + 1))

    return FinModule(("symmetric", m), n, keys, weight, _symmetric_unit, rational(m))


def adjoint(n: int) -> FinModule:
    keys = sorted([(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
                  + [(i, i) for i in range(1, n)])

    def weight(key):
        i, j = key
        return tuple((1 if k == i else 0) - (1 if k == j else 0) for k in range(1, n + 1))

    return FinModule(("adjoint",), n, keys, weight, _adjoint_unit, ZERO)


def trivial(n: int) -> FinModule:
    def weight(key):
        return (0,) * n

    def unit(n_, _, i, j, key):
        return []

    return FinModule(("trivial",), n, [()], weight, unit, ZERO)


def module_from_name(name: str, n: int) -> FinModule:
    """Parse 'trivial' | 'natural' | 'ext:k' | 'sym:m' | 'adjoint'."""
    name = name.strip().lower()
    if name == "trivial":
        return trivial(n)
    if name == "natural":
        return natural(n)
    if name == "adjoint":
        return adjoint(n)
    if name.startswith("ext:"):
        return exterior(n, int(name[4:]))
    if name.startswith("sym:"):
        return symmetric(n, int(name[4:]))
    raise ValueError("unknown module kind: %r" % name)


def wedge_key(i: int, key: tuple):
    """e_i wedge e_key -> (sign, new key), or None when i already occurs."""
    if i in key:
        return None
    q = sum(1 for e in key if e < i)
    return (-1 if q % 2 else 1, tuple(sorted(key + (i,))))


def wedge(i: int, vec) -> SparseVec:
    """Left wedge by e_i from exterior k into exterior k+1 coordinates."""
    out = SparseVec()
    for key, c in vec.items():
        hit = wedge_key(i, key)
        if hit is None:
            continue
        sign, new = hit
        b = out.get(new, 0) + (c if sign > 0 else -c)
        if b:
            out[new] = b
        elif new in out:
            del out[new]
    return out


def rank_one(r, u) -> dict:
    """Entries of the rank-one matrix r u^T: (i,j) -> r_i * u_j."""
    out = {}
    for i, ri in enumerate(r, start=1):
        if not ri:
            continue
        for j, uj in enumerate(u, start=1):
            c = ri * uj
            if c:
                out[(i, j)] = rat(c)
    return out


def offdiagonal_squares_vanish(module: FinModule) -> bool:
    """True iff E_ij^2 acts as zero for every off-diagonal unit (minuscule test)."""
    for i in range(1, module.n + 1):
        for j in range(1, module.n + 1):
            if i == j:
                continue
            for key in module.keys:
                once = module.unit_apply(i, j, SparseVec({key: rational(1)}))
                if module.unit_apply(i, j, once):
                    return False
    return True
