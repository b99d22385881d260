"""Window-truncated verification engine.

Infinite-dimensional claims (generation, simplicity, proper submodules) are
probed on finite exponent windows. A window has a central bound B and a
margin absorbing generator shifts; seeds live in the central box, spans in
the ambient box of bound B + margin. With margin >= L * R (L the word
length, R the generator exponent bound) every word of length <= L applied
to a central seed stays inside the ambient box, so the computed span is
exact out to that depth; past it the engine keeps saturating, dropping
whole images that would leave the ambient box, until a fixed point.

Verdicts: FillsWindow when the span covers the whole central window (its
target part, when a hull restricts the run) - evidence, never proof;
ProperInvariant when saturation reaches a fixed point short of the target -
a window-stable proper subspace, a refutation signal wherever simplicity
is expected; Inconclusive when the work budget runs out first.

Everything is deterministic for a fixed configuration and seed, including
the derivation log and its digest, at any worker count.
"""

from __future__ import annotations

import hashlib
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import glmod, tensor
from .fields import VectorField, euler_field, spanning_generators
from .indices import add, box, dot, inf_norm, inside, zero
from .linalg import SparseVec, kernel_of_map
from .rational import ONE, rat, rational

FILLS = "FillsWindow"
PROPER = "ProperInvariant"
INCONCLUSIVE = "Inconclusive"

#: default window/generator parameters per rank: B, R, L, margin
DEFAULTS = {2: (2, 2, 3, 6), 3: (2, 2, 3, 6), 4: (1, 1, 2, 2)}


def default_params(n: int) -> tuple:
    if n in DEFAULTS:
        return DEFAULTS[n]
    raise ValueError("no default window for n=%d" % n)


@dataclass(frozen=True)
class Window:
    """Central exponent bound and the margin absorbed by generator shifts."""

    central: int
    margin: int

    def __post_init__(self):
        if self.central < 0 or self.margin < 0:
            raise ValueError("window bounds must be nonnegative")

    @property
    def ambient(self) -> int:
        return self.central + self.margin


@dataclass
class ClosureResult:
    verdict: str
    central_rank: int
    central_dim: int
    span: tensor.GradedSpan
    counters: dict
    log: list = field(default_factory=list, repr=False)

    @property
    def log_digest(self) -> str:
        payload = "\n".join(self.log).encode()
        return hashlib.sha256(payload).hexdigest()


def _gen_tables(gens, vmod):
    """Per generator: (r, u, combined rank-one action table on V keys)."""
    out = []
    for X in gens:
        if not any(X.r):
            continue  # zero-shift fields act as scalars on graded rows
        entries = glmod.rank_one(X.r, X.u)
        table = {}
        for key in vmod.keys:
            acc = {}
            for (i, j), a in entries.items():
                for key2, b in vmod.unit_table(i, j)[key]:
                    c = acc.get(key2, 0) + a * b
                    if c:
                        acc[key2] = c
                    elif key2 in acc:
                        del acc[key2]
            table[key] = list(acc.items())
        out.append((X.r, X.u, table))
    return out


def _apply_gen(gen, s, row, twist):
    r, u, table = gen
    c1 = dot(u, s) - dot(u, twist)
    out = {}
    if c1:
        for key, c in row.items():
            out[key] = c * c1
    for key, c in row.items():
        for key2, a in table[key]:
            b = out.get(key2, 0) + c * a
            if b:
                out[key2] = b
            elif key2 in out:
                del out[key2]
    return out


def closure(seeds, gens, window: Window, depth: int, hull=None,
            max_apps: int = 20_000_000, workers: int = 1) -> ClosureResult:
    """Saturate the span of generator words applied to seeds in a window.

    seeds: TensorElements supported in the central box (graded components
    outside the ambient box are rejected). gens: VectorFields. hull: an
    optional GradedSpan every image is known to stay inside (verified
    elsewhere); fullness per exponent is then measured against the hull,
    and the verdict reports filling of the hull's central part.
    """
    if not seeds:
        raise ValueError("closure needs at least one seed")
    ctx = seeds[0].ctx
    vmod = ctx.vmod
    n = ctx.n
    twist = ctx.twist
    gen_bound = max((inf_norm(X.r) for X in gens), default=0)
    if window.margin < depth * gen_bound:
        raise ValueError("margin violation: margin %d < depth %d * generator bound %d"
                         % (window.margin, depth, gen_bound))
    tables = _gen_tables(gens, vmod)
    ambient = window.ambient
    central = list(box(n, window.central))
    central_set = frozenset(central)
    target_at = {}
    for s in central:
        target_at[s] = hull.rank_at(s) if hull is not None else vmod.dim
    central_dim = sum(target_at.values())

    span = tensor.GradedSpan(vmod.dim)
    log = ["closure n=%d module=%s twist=(%s) window=%d+%d depth=%d gens=%d"
           % (n, "-".join(map(str, vmod.kind)), ",".join(map(str, twist)),
              window.central, window.margin, depth, len(gens))]
    counters = {"apps": 0, "inserts": 0, "drops": 0, "pruned": 0, "rows": 0}
    central_rank = 0
    worklist = deque()

    def full_at(s):
        limit = target_at.get(s)
        if limit is None:
            limit = hull.rank_at(s) if hull is not None else vmod.dim
            target_at[s] = limit
        return span.rank_at(s) >= limit

    def push(s, vec, dep, entry):
        nonlocal central_rank
        if not span.insert(s, vec):
            return False
        row = dict(span.rows_at(s)[-1])
        rid = counters["rows"]
        counters["rows"] += 1
        counters["inserts"] += 1
        log.append(entry + " row=%d" % rid)
        worklist.append((s, row, dep))
        if s in central_set:
            central_rank += 1
        return True

    for idx, seed in enumerate(sorted(seeds, key=lambda m: sorted(m.terms))):
        comps = {}
        for (s, vkey), c in seed.terms.items():
            comps.setdefault(s, SparseVec())[vkey] = c
        for s in sorted(comps):
            if not inside(s, ambient):
                raise ValueError("seed component at %s outside the ambient box" % (s,))
            push(s, comps[s], 0, "seed=%d deg=%s" % (idx, s))
    if central_rank >= central_dim:
        return ClosureResult(FILLS, central_rank, central_dim, span, counters, log)

    pool = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        while worklist:
            batch = list(worklist)
            worklist.clear()
            tasks = []
            for s, row, dep in batch:
                for gidx, gen in enumerate(tables):
                    t = add(s, gen[0])
                    if not inside(t, ambient):
                        counters["drops"] += 1
                        continue
                    if full_at(t):
                        counters["pruned"] += 1
                        continue
                    tasks.append((gidx, gen, s, t, row, dep))
            for start in range(0, len(tasks), 256):
                chunk = tasks[start:start + 256]
                todo = [c for c in chunk if not full_at(c[3])]
                counters["apps"] += len(todo)
                if counters["apps"] > max_apps:
                    return ClosureResult(INCONCLUSIVE, central_rank, central_dim,
                                         span, counters, log)
                if pool is not None:
                    images = list(pool.map(
                        lambda c: _apply_gen(c[1], c[2], c[4], twist), todo))
                else:
                    images = [_apply_gen(c[1], c[2], c[4], twist) for c in todo]
                for (gidx, gen, s, t, row, dep), img in zip(todo, images):
                    if not img:
                        continue
                    push(t, SparseVec(img), dep + 1,
                         "img gen=%d from deg=%s" % (gidx, s))
                    if central_rank >= central_dim:
                        return ClosureResult(FILLS, central_rank, central_dim,
                                             span, counters, log)
    finally:
        if pool is not None:
            pool.shutdown(wait=False)

    verdict = FILLS if central_rank >= central_dim else PROPER
    return ClosureResult(verdict, central_rank, central_dim, span, counters, log)


# ------------------------------------------------------------- randomness


def random_element(rng, ctx, bound: int, max_terms: int = 4) -> tensor.TensorElement:
    """Random window element: <= max_terms terms, coefficients in +-{1..3}."""
    out = tensor.TensorElement(ctx)
    for _ in range(rng.randint(1, max_terms)):
        s = tuple(rng.randint(-bound, bound) for _ in range(ctx.n))
        vkey = ctx.vmod.keys[rng.randrange(ctx.vmod.dim)]
        out.add_term(s, vkey, rat(rng.choice([-3, -2, -1, 1, 2, 3])))
    if out.is_zero:
        out.add_term(zero(ctx.n), ctx.vmod.keys[0], ONE)
    return out


def random_image_element(rng, ctx_k, bound: int, max_terms: int = 4):
    """Random element of the level-k de Rham image supported in the window."""
    k = ctx_k.vmod.kind[1]
    lower = glmod.exterior(ctx_k.n, k - 1)
    src = ctx_k.with_vmod(lower)
    for _ in range(64):
        m = tensor.TensorElement(src)
        for _ in range(rng.randint(1, max_terms)):
            s = tuple(rng.randint(-bound, bound) for _ in range(ctx_k.n))
            wkey = lower.keys[rng.randrange(lower.dim)]
            m.add_term(s, wkey, rat(rng.choice([-3, -2, -1, 1, 2, 3])))
        img = tensor.derham_map(m)
        if not img.is_zero:
            return img
    raise RuntimeError("could not sample a nonzero image element")


# ------------------------------------------------------------- evidence


def generation_evidence(ctx, gens, window: Window, depth: int, trials: int,
                        rng, hull=None, workers: int = 1) -> list:
    """Closure verdicts from `trials` random central-window seeds."""
    results = []
    for _ in range(trials):
        if hull is not None:
            seed = random_image_element(rng, ctx, window.central)
        else:
            seed = random_element(rng, ctx, window.central)
        results.append(closure([seed], gens, window, depth,
                               hull=hull, workers=workers))
    return results


def euler_span_scalar(twist, bound: int, n: int) -> tensor.GradedSpan:
    """Graded window span of all Euler images inside P (x) trivial."""
    twist = tuple(rat(t) for t in twist)
    span = tensor.GradedSpan(1)
    for s in box(n, bound):
        if any(si != ti for si, ti in zip(s, twist)):
            span.insert(s, SparseVec({(): ONE}))
    return span


def lattice_scalar(twist, gens, window: Window, depth: int, trials: int,
                   rng) -> dict:
    """Scalar-coefficient module structure over the exponent lattice.

    Exact part: every generator image of every central basis vector lands in
    the Euler-image span (the quotient by it carries the zero action), and
    for an integer twist the missed line x^twist (x) 1 is itself killed by
    every generator. Evidence part (twist off the lattice): the Euler span
    fills the window and every random seed generates it.
    """
    twist = tuple(rat(t) for t in twist)
    n = len(twist)
    vmod = glmod.trivial(n)
    ctx = tensor.context(twist, vmod)
    ambient = window.ambient
    hspan = euler_span_scalar(twist, ambient, n)
    report = {"n": n, "integer_twist": all(t.denominator == 1 for t in twist)}

    bad = 0
    checked = 0
    for s in box(n, window.central):
        m = tensor.basis_element(ctx, s, ())
        for X in gens:
            img = tensor.act_direct(X, m)
            checked += 1
            if not img.is_zero and not hspan.contains_element(img):
                bad += 1
    report["quotient_checks"] = checked
    report["quotient_failures"] = bad

    central = list(box(n, window.central))
    central_rank = hspan.rank_in(central)
    report["central_dim"] = len(central)
    report["euler_central_rank"] = central_rank

    if report["integer_twist"]:
        line = tuple(int(t) for t in twist)
        report["codim"] = len(central) - central_rank
        if inside(line, window.central):
            fixed = tensor.basis_element(ctx, line, ())
            report["fixed_line_killed"] = all(
                tensor.act_direct(X, fixed).is_zero for X in gens)
    else:
        results = generation_evidence(ctx, gens, window, depth, trials, rng)
        report["trials"] = trials
        report["fills"] = sum(1 for r in results if r.verdict == FILLS)
        report["verdicts"] = [r.verdict for r in results]
    return report


def kernel_at(s, twist, vmod_k) -> list:
    """Basis of the de Rham kernel at one exponent (wedge by the eigenvalue)."""
    n = vmod_k.n
    k = vmod_k.kind[1]
    shat = tensor.eigen_vector(s, twist)
    if k >= n:
        return [SparseVec({key: ONE}) for key in vmod_k.keys]

    def image_of(key):
        out = {}
        for i, ci in enumerate(shat, start=1):
            if not ci:
                continue
            hit = glmod.wedge_key(i, key)
            if hit is None:
                continue
            sign, new = hit
            out[new] = out.get(new, 0) + (ci if sign > 0 else -ci)
        return {k2: c for k2, c in out.items() if c}

    return kernel_of_map(list(vmod_k.keys), image_of)


def maximality_evidence(k: int, twist, gens, window: Window, depth: int,
                        trials: int, rng, workers: int = 1,
                        maximality: bool = True) -> dict:
    """Simplicity/maximality evidence for the level-k de Rham image.

    (i) closures from random image vectors must fill the image's central
    window part (rank target = the image's own graded ranks), verified both
    ways by membership; (ii) when maximality is set, the kernel's window
    part plus one vector outside the kernel must generate the full central
    window.
    """
    n = len(twist)
    ctx = tensor.context(twist, glmod.exterior(n, k))
    hull = tensor.derham_image_graded(k, twist, window.ambient, n)
    report = {"k": k, "n": n}

    fills = 0
    contained = True
    covered = True
    results = generation_evidence(ctx, gens, window, depth, trials, rng,
                                  hull=hull, workers=workers)
    central = list(box(n, window.central))
    for res in results:
        if res.verdict == FILLS:
            fills += 1
        for s, mini in res.span.spans.items():
            for row in mini.rows:
                if not hull.mini(s).contains(row):
                    contained = False
        for s in central:
            for row in hull.rows_at(s):
                if not res.span.mini(s).contains(row):
                    covered = False
    report["trials"] = trials
    report["fills"] = fills
    report["closure_inside_image"] = contained
    report["image_covered"] = covered
    report["central_rank"] = max(r.central_rank for r in results)
    report["central_dim"] = results[0].central_dim

    if maximality:
        # (ii) kernel window part plus a vector outside the kernel
        seeds = []
        for s in box(n, window.central):
            for vec in kernel_at(s, twist, ctx.vmod):
                seeds.append(tensor.TensorElement(
                    ctx, {(s, key): c for key, c in vec.items()}))
        for _ in range(64):
            cand = random_element(rng, ctx, window.central)
            if not tensor.kernel_member(cand):
                seeds.append(cand)
                break
        res = closure(seeds, gens, window, depth, workers=workers)
        report["beyond_kernel_verdict"] = res.verdict
        report["beyond_kernel_rank"] = res.central_rank
        report["beyond_kernel_dim"] = res.central_dim
    return report


# ----------------------------------------------- interpolation extraction


def _invert_matrix(rows):
    """Exact inverse of a small dense rational matrix (list of lists)."""
    m = len(rows)
    aug = [[rat(rows[i][j]) for j in range(m)] + [ONE if i == j else rat(0)
           for j in range(m)] for i in range(m)]
    for col in range(m):
        piv = next((r for r in range(col, m) if aug[r][col]), None)
        if piv is None:
            raise ValueError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = ONE / aug[col][col]
        aug[col] = [a * inv for a in aug[col]]
        for r in range(m):
            if r != col and aug[r][col]:
                c = aug[r][col]
                aug[r] = [a - c * b for a, b in zip(aug[r], aug[col])]
    return [row[m:] for row in aug]


def _coeff_of_nodes(nodes):
    """Matrix C with C[a][b] = coefficient of t^a in the b-th Lagrange basis."""
    if len(set(nodes)) != len(nodes):
        raise ValueError("repeated sample points")
    vand = [[rat(t) ** a for a in range(len(nodes))] for t in nodes]
    return _invert_matrix(vand)


@dataclass
class PolyFamily:
    """Sampled polynomial family r -> element, on a product grid.

    active lists the 1-based exponent coordinates that vary; the others sit
    at the base point. nodes are the per-coordinate sample values; the
    declared total degree bound needs len(nodes) >= degree_bound + 1.
    """

    n: int
    active: tuple
    nodes: tuple
    base: tuple
    degree_bound: int
    values: dict

    @classmethod
    def sample(cls, fn, n, active, degree_bound, nodes=(-2, -1, 0, 1, 2),
               base=None):
        active = tuple(active)
        nodes = tuple(nodes)
        if len(nodes) < degree_bound + 1:
            raise ValueError("need %d sample points for degree %d, got %d"
                             % (degree_bound + 1, degree_bound, len(nodes)))
        if base is None:
            base = tuple(range(1, n + 1))
        values = {}
        from itertools import product as iproduct
        for combo in iproduct(nodes, repeat=len(active)):
            r = list(base)
            for coord, val in zip(active, combo):
                r[coord - 1] = val
            values[combo] = fn(tuple(r))
        return cls(n, active, nodes, tuple(base), degree_bound, values)


def coeff_extract(family: PolyFamily, target: dict):
    """Exact coefficient of the monomial prod r_i^{target[i]} (active coords).

    Lagrange interpolation per coordinate; exact over the rationals and
    independent of the admissible grid. target maps 1-based coordinates to
    exponents; omitted active coordinates mean exponent 0.
    """
    for coord in target:
        if coord not in family.active:
            raise ValueError("coordinate %d not active in the family" % coord)
    exps = [target.get(coord, 0) for coord in family.active]
    if sum(exps) > family.degree_bound:
        raise ValueError("target degree exceeds the declared bound")
    coeffs = _coeff_of_nodes(family.nodes)
    node_index = {t: i for i, t in enumerate(family.nodes)}
    out = None
    for combo, value in family.values.items():
        w = ONE
        for exp, node in zip(exps, combo):
            w = w * coeffs[exp][node_index[node]]
            if not w:
                break
        if not w:
            continue
        piece = value.scaled(w)
        out = piece if out is None else out + piece
    if out is None:
        raise ValueError("empty sample grid")
    return out


# ------------------------------------------------------------ fingerprints


def lattice_fingerprint(twist) -> tuple:
    """The twist modulo the integer lattice, coordinatewise in [0, 1)."""
    out = []
    for t in twist:
        t = rat(t)
        out.append(t - (t.numerator // t.denominator))
    return tuple(out)


def iso_evidence(twist1, vmod1, twist2, vmod2) -> dict:
    """Computable fingerprints separating non-isomorphic tensor modules.

    Same eigenvalue lattice (twists congruent mod Z^n) and same finite
    module character are necessary for isomorphism; a mismatch in either is
    an exact distinction.
    """
    lat1, lat2 = lattice_fingerprint(twist1), lattice_fingerprint(twist2)
    ch1, ch2 = vmod1.character(), vmod2.character()
    separated = None
    if lat1 != lat2:
        separated = "eigenvalue-lattice"
    elif ch1 != ch2:
        separated = "character"
    return {
        "lattice": [tuple(str(c) for c in lat1), tuple(str(c) for c in lat2)],
        "characters_equal": ch1 == ch2,
        "verdict": "DISTINGUISHED" if separated else "EQUAL",
        "separated_by": separated,
    }
