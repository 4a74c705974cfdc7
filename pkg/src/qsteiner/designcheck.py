"""Exhaustive and seeded checks of the Steiner and large-set properties.

Enumeration is confined to subspaces of F_{q^m}, while blocks and roots may
live anywhere in the ambient F_{q^M}.  A pass is therefore a finite shadow
of the statement over the algebraic closure, not a proof of it.

Sweeps split the Grassmannian by pivot pattern; with ``jobs > 1`` the
chunks run in worker processes and their reports are merged.
"""

from __future__ import annotations

import itertools
import json
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from . import linalg
from .errors import AmbientTooSmall, BadDims, OutOfRange, ZeroA
from .gf import Elem, Tower
from .moore import annihilator_bottom, annihilator_top, moore_det
from .qpoly import (
    QPolynomial,
    ambient_root_count,
    conventional_gcd,
    kernel_intersection,
    subfield,
)
from .serialize import encode_elem, encode_subspace
from .steiner import (
    Block,
    ConstructionParams,
    block,
    canonical_label,
    classify,
    cover,
    extract_aB,
    f_from_aB,
    recommended_ambient,
)
from .subspace import Subspace

DEFAULT_TRIALS = 100


def gaussian_binomial(m: int, d: int, q: int) -> int:
    """Number of d-dimensional subspaces of F_q^m."""
    if not 0 <= d <= m:
        raise OutOfRange(f"need 0 <= d <= m, got d={d}, m={m}")
    num = den = 1
    for i in range(d):
        num *= q ** (m - i) - 1
        den *= q ** (d - i) - 1
    return num // den


def pivot_patterns(m: int, d: int) -> list[tuple[int, ...]]:
    return list(itertools.combinations(range(m), d))


def enumerate_rref(m: int, d: int, q: int,
                   pivots: Sequence[int] | None = None) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All d x m RREF matrices over F_q (entries as F_q ints), optionally for one pivot pattern."""
    patterns = [tuple(pivots)] if pivots is not None else pivot_patterns(m, d)
    for piv in patterns:
        pset = set(piv)
        free = [(r, c) for r, pc in enumerate(piv) for c in range(pc + 1, m) if c not in pset]
        for vals in itertools.product(range(q), repeat=len(free)):
            rows = [[0] * m for _ in range(d)]
            for r, pc in enumerate(piv):
                rows[r][pc] = 1
            for (r, c), v in zip(free, vals):
                rows[r][c] = v
            yield tuple(tuple(r) for r in rows)


def enumerate_subspaces(tower: Tower, m: int, d: int,
                        pivots: Sequence[int] | None = None) -> Iterator[Subspace]:
    """Every d-subspace of F_{q^m} (the fixed field of x -> x^(q^m)) exactly once."""
    if m < 1 or tower.M % m or not 0 <= d <= m:
        raise BadDims(f"need m | M = {tower.M} and 0 <= d <= m, got m={m}, d={d}")
    F = tower.base
    sub_basis = subfield(tower, m).basis
    for mat in enumerate_rref(m, d, F.q, pivots):
        vecs = []
        for row in mat:
            v = [0] * tower.M
            for c, b in zip(row, sub_basis):
                if c:
                    v = F.vec_add(v, F.vec_scale(c, b))
            vecs.append(v)
        yield Subspace.from_rows(tower, vecs)


@dataclass
class VerificationReport:
    name: str
    checked: int = 0
    failures: list[dict] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def status(self) -> str:
        return "fail" if self.failures else "pass"

    def fail(self, kind: str, **witness) -> None:
        self.failures.append({"kind": kind, **witness})

    def merge(self, other: VerificationReport) -> VerificationReport:
        parts = self.name.split("+") + other.name.split("+")
        name = "+".join(dict.fromkeys(parts))
        return VerificationReport(name, self.checked + other.checked,
                                  self.failures + other.failures,
                                  self.elapsed + other.elapsed)

    def to_dict(self, timing: bool = False) -> dict:
        out = {"name": self.name, "status": self.status, "checked": self.checked}
        if timing:
            out["elapsed_ms"] = round(self.elapsed * 1000, 3)
        out["failures"] = sorted(self.failures, key=lambda f: json.dumps(f, sort_keys=True))
        return out


def _pmap(fn: Callable, tasks: list, jobs: int) -> list:
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=min(jobs, len(tasks))) as ex:
        return list(ex.map(fn, tasks))


def _enc_space(V: Subspace) -> list:
    return encode_subspace(V)


# -- Steiner property -----------------------------------------------------

def _cover_chunk(task) -> list[tuple[Subspace, Block]]:
    params, a, m, piv = task
    return [(V, cover(params, a, V)) for V in enumerate_subspaces(params.tower, m, params.t, piv)]


def verify_steiner(params: ConstructionParams, a: Elem, m: int, *, trials: int = DEFAULT_TRIALS,
                   seed: int = 0, jobs: int = 1) -> VerificationReport:
    """Every t-space of F_{q^m} lies in exactly one computed block of the class of ``a``."""
    if not a:
        raise ZeroA("a must be nonzero")
    start = time.perf_counter()
    T, t = params.tower, params.t
    rep = VerificationReport("steiner")
    tasks = [(params, a, m, piv) for piv in pivot_patterns(m, t)]
    pairs = [pair for chunk in _pmap(_cover_chunk, tasks, jobs) for pair in chunk]
    rep.checked = len(pairs)

    blocks: dict[Subspace, Block] = {}
    for V, b in pairs:
        if b.space.dim != t + 1 or not b.space.contains_space(V):
            rep.fail("cover_missing", V=_enc_space(V), block=_enc_space(b.space))
        if b.f != f_from_aB(params, a, b.B) or b.f.kernel() != b.space:
            rep.fail("cover_shape", V=_enc_space(V), block=_enc_space(b.space))
        blocks.setdefault(b.space, b)

    spaces = list(blocks)
    for V, _ in pairs:
        n = sum(1 for W in spaces if W.contains_space(V))
        if n != 1:
            rep.fail("not_unique", V=_enc_space(V), count=n)
    for W1, W2 in itertools.combinations(spaces, 2):
        inter = W1.intersection(W2)
        if inter.dim > t - 1:
            rep.fail("intersection", W1=_enc_space(W1), W2=_enc_space(W2), dim=inter.dim)

    # negative control: other coefficient tuples do not reach V
    rng = random.Random(seed)
    for _ in range(trials if pairs else 0):
        V, b = pairs[rng.randrange(len(pairs))]
        B2 = tuple(T.random(rng) for _ in range(t))
        if B2 == b.B:
            continue
        f2 = f_from_aB(params, a, B2)
        if all(not f2(v) for v in V.vectors()):
            rep.fail("second_block", V=_enc_space(V), B=[encode_elem(x) for x in B2])
    rep.elapsed = time.perf_counter() - start
    return rep


# -- large-set property ---------------------------------------------------

def _classify_chunk(task) -> list[Block]:
    params, m, piv = task
    return [classify(params, W) for W in enumerate_subspaces(params.tower, m, params.t + 1, piv)]


def _incidence_chunk(task) -> list[dict]:
    params, m, piv, classified = task
    t, q = params.t, params.q
    failures = []
    through = gaussian_binomial(m - t, 1, q)
    for V in enumerate_subspaces(params.tower, m, t, piv):
        containing = [b for b in classified if b.space.contains_space(V)]
        labels = [b.label for b in containing]
        if len(containing) != through:
            failures.append({"kind": "incidence_count", "V": _enc_space(V), "count": len(containing)})
        if len(set(labels)) != len(labels):
            failures.append({"kind": "label_clash", "V": _enc_space(V),
                             "labels": [encode_elem(lb.rep) for lb in labels]})
        for b in containing:
            if cover(params, b.a, V).space != b.space:
                failures.append({"kind": "roundtrip", "V": _enc_space(V), "W": _enc_space(b.space)})
    return failures


def verify_largeset(params: ConstructionParams, m: int, *, jobs: int = 1) -> VerificationReport:
    """Every (t+1)-space of F_{q^m} lies in some class, and the (t+1)-spaces
    through a fixed t-space carry pairwise distinct labels."""
    start = time.perf_counter()
    t = params.t
    rep = VerificationReport("largeset")
    if m < t + 1:
        raise BadDims(f"F_(q^{m}) has no {t + 1}-spaces")
    tasks = [(params, m, piv) for piv in pivot_patterns(m, t + 1)]
    classified = [b for chunk in _pmap(_classify_chunk, tasks, jobs) for b in chunk]
    rep.checked = len(classified)
    for b in classified:
        if canonical_label(b.a) != b.label or b.f != f_from_aB(params, b.a, b.B):
            rep.fail("classify_shape", W=_enc_space(b.space))
        if any(b.f(v) for v in b.space.vectors()):
            rep.fail("classify_kernel", W=_enc_space(b.space))
    tasks = [(params, m, piv, classified) for piv in pivot_patterns(m, t)]
    for chunk in _pmap(_incidence_chunk, tasks, jobs):
        rep.failures.extend(chunk)
    rep.elapsed = time.perf_counter() - start
    return rep


# -- seeded lemma suites --------------------------------------------------

def _sample(rng: random.Random, sub: Subspace) -> Elem:
    """Uniform element of the subspace ``sub``."""
    F = sub.tower.base
    v = [0] * sub.tower.M
    for row in sub.basis:
        c = rng.randrange(F.q)
        if c:
            v = F.vec_add(v, F.vec_scale(c, row))
    return Elem(sub.tower, tuple(v))


def _sample_nonzero(rng: random.Random, sub: Subspace) -> Elem:
    while True:
        x = _sample(rng, sub)
        if x:
            return x


def default_sample_degree(params: ConstructionParams) -> int:
    """Largest s with M = s * lcm(1..q^t); 1 if the ambient is not such a multiple."""
    L = recommended_ambient(params.q, params.t, 1)
    return params.tower.M // L if params.tower.M % L == 0 else 1


MAX_TRIES = 2000
# a negative sample whose kernel never fits the ambient is skipped, not failed
NEGATIVE_TRIES = 64


def _full_block(params: ConstructionParams, rng: random.Random, sub: Subspace,
                a: Elem | None = None) -> Block:
    """Sample (a, B) from F_{q^s} until the kernel of f_{a,B} lies in the ambient."""
    for _ in range(MAX_TRIES):
        aa = _sample_nonzero(rng, sub) if a is None else a
        B = tuple(_sample(rng, sub) for _ in range(params.t))
        f = f_from_aB(params, aa, B)
        W = f.kernel()
        if W.dim == params.t + 1:
            return Block(W, canonical_label(aa), aa, B, f)
    raise AmbientTooSmall("could not sample a block inside the ambient field")


def _is_fq_multiple(params: ConstructionParams, a, B, c, D) -> bool:
    T = params.tower
    for lam in range(1, T.q):
        s = T.embed(lam)
        if c == s * a and all(d == s * b for b, d in zip(B, D)):
            return True
    return False


def verify_scalar_lemma(params: ConstructionParams, trials: int = DEFAULT_TRIALS, seed: int = 0,
                        sample_degree: int | None = None) -> VerificationReport:
    """Same kernel under F_q^* scaling of (a, B); different kernel otherwise."""
    start = time.perf_counter()
    T, t = params.tower, params.t
    rep = VerificationReport("scalar_lemma")
    rng = random.Random(seed)
    s = sample_degree or default_sample_degree(params)
    sub = subfield(T, s)
    fq_star = [T.embed(lam) for lam in range(1, T.q)]
    for trial in range(trials):
        blk = _full_block(params, rng, sub)
        a, B, W = blk.a, blk.B, blk.space
        wit = {"trial": trial, "a": encode_elem(a), "B": [encode_elem(x) for x in B]}
        for lam in fq_star:
            if f_from_aB(params, lam * a, tuple(lam * b for b in B)).kernel() != W:
                rep.fail("scaled_kernel_differs", lam=encode_elem(lam), **wit)
        # from the space side: the recovered coefficients are an F_q-multiple
        k = classify(params, W)
        if not _is_fq_multiple(params, k.a, k.B, a, B):
            rep.fail("classify_not_multiple", **wit)
        # non-multiples: a scalar outside F_q, a changed B, and an unrelated pair
        kinds = ["mu", "b_changed", "random"] if s > 1 else ["b_changed", "random"]
        for kind in kinds:
            for _ in range(NEGATIVE_TRIES):
                if kind == "mu":
                    mu = _sample_nonzero(rng, sub)
                    c, D = mu * a, tuple(mu * b for b in B)
                elif kind == "b_changed":
                    c, D = a, tuple(_sample(rng, sub) for _ in range(t))
                else:
                    c, D = _sample_nonzero(rng, sub), tuple(_sample(rng, sub) for _ in range(t))
                if _is_fq_multiple(params, a, B, c, D):
                    continue
                K = f_from_aB(params, c, D).kernel()
                if K.dim == t + 1:
                    if K == W:
                        rep.fail("non_multiple_same_kernel", kind=kind, c=encode_elem(c),
                                 D=[encode_elem(x) for x in D], **wit)
                    break
        rep.checked += 1
    rep.elapsed = time.perf_counter() - start
    return rep


def verify_intersection_lemma(params: ConstructionParams, trials: int = DEFAULT_TRIALS,
                              seed: int = 0, sample_degree: int | None = None) -> VerificationReport:
    """Two blocks of one class meet in at most a (t-1)-space; linear algebra and
    the conventional gcd must agree on the intersection."""
    start = time.perf_counter()
    T, t, q = params.tower, params.t, params.q
    rep = VerificationReport("intersection_lemma")
    rng = random.Random(seed)
    s = sample_degree or default_sample_degree(params)
    sub = subfield(T, s)
    for trial in range(trials):
        b1 = _full_block(params, rng, sub)
        a = b1.a
        b2 = None
        if trial % 2:
            # a t-space sharing a (t-1)-space with b1, covered inside the same class
            U = [sum((v.scale(rng.randrange(q)) for v in b1.space.vectors()), T.zero)
                 for _ in range(t - 1)]
            V = Subspace.span(T, [*U, _sample(rng, sub)])
            if V.dim == t and not b1.space.contains_space(V):
                try:
                    b2 = cover(params, a, V)
                except AmbientTooSmall:
                    pass  # V's field can exceed F_{q^s}; fall back to a random C
        while b2 is None or b2.B == b1.B:
            b2 = _full_block(params, rng, sub, a=a)
        rep.checked += 1
        wit = {"trial": trial, "a": encode_elem(a), "B": [encode_elem(x) for x in b1.B],
               "C": [encode_elem(x) for x in b2.B]}
        inter = kernel_intersection(b1.f, b2.f)
        if inter != b1.space.intersection(b2.space):
            rep.fail("intersection_routes_differ", **wit)
        if inter.dim > t - 1:
            rep.fail("intersection_too_large", dim=inter.dim, **wit)
        h = conventional_gcd(b1.f, b2.f)
        roots = ambient_root_count(T, h)
        if roots != q**inter.dim or len(h) - 1 != roots or roots > q ** (t - 1):
            rep.fail("gcd_disagrees", roots=roots, gcd_degree=len(h) - 1, dim=inter.dim, **wit)
        if QPolynomial.from_conventional(T, h).kernel() != inter:
            rep.fail("gcd_kernel_differs", **wit)
        # the difference has no x-term and is a q-th power of a lower q-polynomial
        diff = b1.f - b2.f
        root = diff.q_shift_root()
        x = T.random(rng)
        if root(x).frob(1) != diff(x) or root.qdegree != diff.qdegree - 1:
            rep.fail("q_shift_root", **wit)
    rep.elapsed = time.perf_counter() - start
    return rep


def _independent(rng: random.Random, T: Tower, k: int) -> list[Elem]:
    while True:
        vs = [T.random(rng) for _ in range(k)]
        if linalg.rank(T.base, [v.c for v in vs], T.M) == k:
            return vs


def _random_gl(rng: random.Random, F, k: int) -> list[list[int]]:
    while True:
        A = [[rng.randrange(F.q) for _ in range(k)] for _ in range(k)]
        if linalg.det(F, A):
            return A


def _apply(F, A: list[list[int]], vs: list[Elem]) -> list[Elem]:
    T = vs[0].tower
    return [sum((v.scale(c) for c, v in zip(row, vs) if c), T.zero) for row in A]


def verify_moore_invariance(params: ConstructionParams, trials: int = DEFAULT_TRIALS,
                            seed: int = 0, k: int | None = None) -> VerificationReport:
    """Moore determinants and annihilators under F_q basis changes."""
    start = time.perf_counter()
    T, t = params.tower, params.t
    F = T.base
    k = t + 1 if k is None else k
    if k > T.M:
        raise BadDims(f"cannot pick {k} independent elements in F_(q^{T.M})")
    rep = VerificationReport("moore_invariance")
    rng = random.Random(seed)
    for trial in range(trials):
        vs = _independent(rng, T, k)
        A = _random_gl(rng, F, k)
        dA = linalg.det(F, A)
        if trial % 2 == 0:
            # force det(A) = 1
            A[0] = F.vec_scale(F.inv(dA), A[0])
            dA = 1
        ws = _apply(F, A, vs)
        wit = {"trial": trial, "v": [encode_elem(v) for v in vs], "A": A}
        scale = T.embed(dA)
        md = moore_det(vs)
        if moore_det(ws) != scale * md:
            rep.fail("det_scaling", **wit)
        top = annihilator_top(vs)
        if annihilator_top(ws) != top.scale(scale):
            rep.fail("annihilator_scaling", **wit)
        span = Subspace.span(T, vs)
        if Subspace.span(T, ws) != span:
            rep.fail("span_changed", **wit)
        if top.qdegree != k or not top.is_separable() or top.kernel() != span:
            rep.fail("annihilator_kernel", **wit)
        bottom = annihilator_bottom(vs)
        if bottom != (top if k % 2 == 0 else -top):
            rep.fail("row_convention_sign", **wit)
        w = T.random(rng)
        if bottom(w) != moore_det([*vs, w]):
            rep.fail("bottom_row_identity", **wit)
        dep = [*vs[:-1], _apply(F, [[rng.randrange(F.q) for _ in range(k - 1)]], vs[:-1])[0]] \
            if k > 1 else [T.zero]
        if moore_det(dep):
            rep.fail("dependent_nonzero_det", **wit)
        if k == t + 1 and extract_aB(params, top)[0] != md:
            rep.fail("label_coherence", **wit)
        rep.checked += 1
    rep.elapsed = time.perf_counter() - start
    return rep


def verify_lemmas(params: ConstructionParams, trials: int = DEFAULT_TRIALS,
                  seed: int = 0) -> VerificationReport:
    rep = verify_scalar_lemma(params, trials, seed)
    rep = rep.merge(verify_intersection_lemma(params, trials, seed))
    rep = rep.merge(verify_moore_invariance(params, trials, seed))
    rep.name = "lemmas"
    return rep
