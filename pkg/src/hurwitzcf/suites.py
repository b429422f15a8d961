"""Seeded sample generators and the verification suites behind ``verify``."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .cfengine import Algorithm, Status, evaluate_finite, expand, normalize_input, step_H, step_T
from .classify import (
    InconclusiveOrbit,
    classify,
    in_N1,
    purely_periodic_oracle,
    sqrt_reduced,
    verify_dual_reversal,
)
from .exactnum import INF, QuadraticElement, abs2, galois_conjugate, make_field, sqrt_element
from .gaussian import GaussianRational, gaussian_int
from .natext import (
    ExtPoint,
    density_identity_check,
    ext_step,
    in_Xhat,
    in_Xtilde,
    injectivity_sample,
    on_excluded_boundary,
    step_problems,
)
from .regions import (
    RegionId,
    floor_H,
    floor_T,
    i_power,
    in_Q_w,
    in_region,
    in_S_w,
    lattice_coords,
    lattice_point,
)

__all__ = [
    "POPULATION_FIELDS",
    "SUITES",
    "SuiteResult",
    "k_arc_points",
    "quadratic_population",
    "random_gaussian",
    "rational_pairs",
    "run_suite",
    "tiling_points",
    "y_segment_points",
]

POPULATION_FIELDS = ((2, 1), (1, 2), (-3, 0), (0, 5), (3, 3), (2, 0), (3, 0))

_K_CENTERS = [i_power(j - 1) * GaussianRational(1, -1, 2) for j in range(1, 5)]


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list[str] = field(default_factory=list)
    diagnostics: list[str] = field(default_factory=list)

    def check(self, ok: bool, what) -> bool:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            self.failures.append(str(what))
        return ok

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def merge(self, other: SuiteResult) -> SuiteResult:
        self.passed += other.passed
        self.failed += other.failed
        self.failures += [f"{other.name}: {f}" for f in other.failures]
        self.diagnostics += [f"{other.name}: {d}" for d in other.diagnostics]
        return self

    def summary(self) -> str:
        return f"{self.name}: {self.passed} passed, {self.failed} failed"


# ---------------------------------------------------------------------------
# generators


def random_gaussian(rng: random.Random, num: int = 12, den: int = 12) -> GaussianRational:
    return GaussianRational(rng.randint(-num, num), rng.randint(-num, num), rng.randint(1, den))


def _random_in_box(rng: random.Random, den: int = 60) -> GaussianRational:
    # u, v uniform on the grid of [-1/2, 1/2) with step 1/den
    u = Fraction(rng.randrange(-den // 2, den // 2), den)
    v = Fraction(rng.randrange(-den // 2, den // 2), den)
    return GaussianRational.from_parts(u + v, u - v)


def tiling_points(rng: random.Random, count: int) -> list[GaussianRational]:
    """Rational points with a deliberate share on edges, vertices and odd lattice points."""
    pts = []
    for k in range(count):
        M, L = rng.randint(-6, 6), rng.randint(-6, 6)
        kind = k % 5
        if kind == 0:
            pts.append(random_gaussian(rng, 60, 17))
            continue
        if kind == 1:  # on an edge u = M + 1/2 or v = L + 1/2
            t = Fraction(rng.randint(-20, 20), 40)
            u, v = (Fraction(2 * M + 1, 2), L + t) if rng.random() < 0.5 else (M + t, Fraction(2 * L + 1, 2))
        elif kind == 2:  # lattice-box vertex
            u, v = Fraction(2 * M + 1, 2), Fraction(2 * L + 1, 2)
        elif kind == 3:  # Gaussian integer, odd or even
            pts.append(gaussian_int(rng.randint(-9, 9), rng.randint(-9, 9)))
            continue
        else:  # near a unit circle around a lattice point
            u = M + Fraction(rng.randint(-30, 30), 61)
            v = L + Fraction(rng.randint(-30, 30), 61)
        pts.append(GaussianRational.from_parts(u + v, u - v))
    return pts


def k_arc_points(rng: random.Random, j: int, count: int, box: RegionId = RegionId.Xclosure) -> list:
    """Quadratic points of K_j from rational tangent half-angles; they live in Q(i, sqrt 2)."""
    f = make_field(2, 0)
    out: list = []
    seen = set()
    tries = 0
    while len(out) < count and tries < 100 * count:
        tries += 1
        t = Fraction(rng.randint(-12, 12), rng.randint(1, 6))
        e = GaussianRational.from_parts(1 - t * t, 2 * t) / (1 + t * t)
        z = _K_CENTERS[j - 1] + QuadraticElement(f, 0, e / 2)
        if z in seen or not in_region(z, RegionId.indexed("K", j)) or not in_region(z, box):
            continue
        seen.add(z)
        out.append(z)
    return out


def y_segment_points(rng: random.Random, j: int, count: int, box: RegionId = RegionId.Xclosure) -> list:
    """Points i^(j-1)(s - i(1-s)) with s = a + b sqrt(l) strictly inside (0, 1)."""
    out: list = []
    seen = set()
    tries = 0
    while len(out) < count and tries < 100 * count:
        tries += 1
        l = rng.choice((2, 3, 5))
        f = make_field(l, 0)
        a = Fraction(rng.randint(-8, 8), rng.randint(1, 4))
        b = Fraction(rng.choice((-1, 1)) * rng.randint(1, 3), rng.randint(1, 4))
        s = QuadraticElement(f, GaussianRational.from_parts(a), GaussianRational.from_parts(b))
        z = i_power(j - 1) * (s - gaussian_int(0, 1) * (1 - s))
        if z in seen or not in_region(z, RegionId.indexed("Y", j)) or not in_region(z, box):
            continue
        seen.add(z)
        out.append(z)
    return out


def quadratic_population(rng: random.Random, count: int = 240) -> list[tuple[str, object]]:
    """Labelled quadratic irrationals in the closed box.

    Random field elements (folded by the H floor) are mixed with a state from
    each orbit's period, the square-root table values and K/Y constructions.
    """
    pop: list[tuple[str, object]] = []
    seen = set()

    def add(label, z):
        if z not in seen:
            seen.add(z)
            pop.append((label, z))

    n_random = max(count // 2, 1)
    draws = 0
    while len(pop) < n_random:
        m, n = rng.choice(POPULATION_FIELDS)
        # a small irrational part keeps the conjugate near alpha, so most of
        # these orbits have a preperiod; wide ones are mostly purely periodic
        draws += 1
        narrow = draws % 3 != 0
        y = GaussianRational(rng.randint(-2, 2), rng.randint(-2, 2), rng.randint(3, 6)) if narrow else random_gaussian(rng, 12, 4)
        if y.is_zero():
            continue
        _, z = normalize_input(random_gaussian(rng, 12, 4) + y * sqrt_element(m, n), Algorithm.H)
        add(f"random D={m}{n:+d}i", z)
        e = expand(z, Algorithm.H, max_steps=3000)
        if e.status is Status.PERIODIC and e.preperiod:
            add(f"cycle D={m}{n:+d}i", e.states[len(e.preperiod)])
    for m in range(-3, 4):
        for n in range(-3, 4):
            try:
                add(f"sqrt({m}{n:+d}i)", sqrt_reduced(m, n, Algorithm.H))
            except ValueError:
                continue
    per_arc = max((count - len(pop)) // 8, 2)
    for j in range(1, 5):
        for z in k_arc_points(rng, j, per_arc):
            add(f"K{j}", z)
        for z in y_segment_points(rng, j, per_arc):
            add(f"Y{j}", z)
    return pop


def _random_w(rng: random.Random) -> GaussianRational:
    return GaussianRational(rng.randint(-80, 80), rng.randint(-80, 80), rng.randint(1, 20))


def rational_pairs(rng: random.Random, count: int, algorithm="T") -> list[ExtPoint]:
    """Rational pairs in the extension domain (z != 0, w finite and != 0, z != w)."""
    algorithm = Algorithm.parse(algorithm)
    inside = in_Xhat if algorithm is Algorithm.T else in_Xtilde
    out = []
    while len(out) < count:
        z = _random_in_box(rng, rng.choice((24, 60, 97)))
        if z.is_zero():
            continue
        for _ in range(50):
            w = _random_w(rng)
            if w.is_zero() or w == z:
                continue
            p = ExtPoint(z, w)
            if inside(p):
                out.append(p)
                break
    return out


# ---------------------------------------------------------------------------
# suites


def suite_tilings(seed: int = 0, count: int = 1000) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("tilings")
    for z in tiling_points(rng, count):
        M0, L0 = lattice_coords(floor_T(z))
        cands = [lattice_point(M0 + dM, L0 + dL) for dM in (-1, 0, 1) for dL in (-1, 0, 1)]
        q_hits = [w for w in cands if in_Q_w(z, w)]
        res.check(len(q_hits) == 1, f"Q_w hits at {z}: {[str(w) for w in q_hits]}")
        s_hits = [w for w in cands if in_S_w(z, w)]
        odd = z.is_integer() and not z.is_even()
        if odd:
            res.check(not s_hits, f"odd lattice point {z} lies in {[str(w) for w in s_hits]}")
        else:
            res.check(len(s_hits) == 1, f"S_w hits at {z}: {[str(w) for w in s_hits]}")
        res.check(in_region(z - floor_T(z), RegionId.X), f"z - floor_T(z) outside X at {z}")
    return res


def _orbit(z, step_fn, n):
    out = []
    for _ in range(n):
        _, z = step_fn(z)
        out.append(z)
    return out


def _in_any(z, prefix, js):
    return any(in_region(z, RegionId.indexed(prefix, j)) for j in js)


# images of the arcs and segments under one step (membership direction only)
H_IMAGES = {("Y", 1): ("K", 4), ("Y", 2): ("K", 3), ("Y", 3): ("K", 2), ("Y", 4): ("K", 1),
            ("K", 1): ("Y", 2), ("K", 2): ("Y", 1), ("K", 3): ("Y", 4), ("K", 4): ("Y", 3)}  # fmt: skip
T_IMAGES = {("Y", 3): ("K", 2), ("Y", 4): ("K", 1),
            ("K", 1): ("Y", 4), ("K", 2): ("Y", 3), ("K", 3): ("Y", 4), ("K", 4): ("Y", 3)}  # fmt: skip


def arc_pattern(u, n: int = 4) -> list[bool]:
    """Agreement of T_H^k(u) and T_T^k(u) for k = 1..n."""
    return [a == b for a, b in zip(_orbit(u, step_H, n), _orbit(u, step_T, n))]


def suite_lemmas(seed: int = 0, count: int = 50) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("lemmas")
    k_pts = []
    for j in (1, 2):
        k_pts += k_arc_points(rng, j, count - count // 2 if j == 1 else count // 2, RegionId.X)
    y_pts = []
    for j in (3, 4):
        y_pts += y_segment_points(rng, j, count - count // 2 if j == 3 else count // 2, RegionId.X)
    res.check(len(k_pts) >= count and len(y_pts) >= count, f"constructed {len(k_pts)} K and {len(y_pts)} Y points")

    for u in k_pts:
        h, t = _orbit(u, step_H, 4), _orbit(u, step_T, 4)
        pat = [a == b for a, b in zip(h, t)]
        res.check(pat == [False, False, True, True] and _in_any(h[3], "K", (1, 2)), f"K pattern {pat} at {u}")
    for u in y_pts:
        h, t = _orbit(u, step_H, 4), _orbit(u, step_T, 4)
        pat = [a == b for a, b in zip(h, t)]
        res.check(pat == [True, False, False, True] and _in_any(h[3], "Y", (3, 4)), f"Y pattern {pat} at {u}")

    # first disagreement: T_H lands on Y1 or Y2, T_T on Y3 or Y4, and the orbits rejoin on K1 or K2
    literal_hits = 0
    probes = k_pts + [z for _, z in quadratic_population(rng, 120) if in_region(z, RegionId.X)]
    for u in probes:
        h, t = _orbit(u, step_H, 4), _orbit(u, step_T, 4)
        if h[0] == t[0]:
            continue
        literal_hits += _in_any(h[0], "Y", (3, 4))
        ok = _in_any(h[0], "Y", (1, 2)) and _in_any(t[0], "Y", (3, 4)) and h[3] == t[3] and _in_any(h[3], "K", (1, 2))
        res.check(ok, f"first-disagreement landing at {u}")
    res.diagnostics.append(f"T_H(u) in Y3 or Y4 after a first disagreement: {literal_hits} times")

    for table, step_fn, box in ((H_IMAGES, step_H, RegionId.Xclosure), (T_IMAGES, step_T, RegionId.X)):
        for (kind, j), (img_kind, img_j) in table.items():
            gen = k_arc_points if kind == "K" else y_segment_points
            for u in gen(rng, j, 5, box):
                _, v = step_fn(u)
                res.check(in_region(v, RegionId.indexed(img_kind, img_j)), f"{kind}{j} image of {u} not in {img_kind}{img_j}")
    return res


@dataclass
class PopulationRun:
    """Outcome of the predicate/oracle comparison over one population."""

    checks: int = 0
    disagreements: list = field(default_factory=list)
    corrected_disagreements: list = field(default_factory=list)
    far_ray_cases: list = field(default_factory=list)
    inconclusive: list = field(default_factory=list)
    periodic_H: list = field(default_factory=list)
    xtilde_only: list = field(default_factory=list)
    xtilde_failures: list = field(default_factory=list)
    # (algorithm, oracle verdict) -> count
    verdicts: Counter = field(default_factory=Counter)


def run_population(population, max_steps: int = 10000) -> PopulationRun:
    run = PopulationRun()
    for label, z in population:
        algs = [Algorithm.H] + ([Algorithm.T] if in_region(z, RegionId.X) else [])
        for alg in algs:
            try:
                rep = classify(z, alg, max_steps)
            except InconclusiveOrbit:
                run.inconclusive.append((label, z, alg))
                continue
            run.checks += 1
            run.verdicts[(alg.value, rep.oracle_result)] += 1
            if not rep.agrees:
                run.disagreements.append((label, z, alg, rep))
            if rep.corrected_result != rep.oracle_result:
                run.corrected_disagreements.append((label, z, alg, rep))
            if rep.far_ray_case:
                run.far_ray_cases.append((label, z, alg))
            if alg is Algorithm.H:
                in_xt = in_Xtilde(ExtPoint(z, galois_conjugate(z)))
                if rep.oracle_result:
                    run.periodic_H.append((label, z))
                # N1 and pure periodicity each force membership in the tilde domain
                if (rep.predicate_result or rep.oracle_result) and not in_xt:
                    run.xtilde_failures.append((label, z))
                if in_xt and not rep.predicate_result:
                    run.xtilde_only.append((label, z))
    return run


def suite_periodicity(seed: int = 0, count: int = 360) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("periodicity")
    run = run_population(quadratic_population(rng, count))
    res.check(run.checks >= count, f"only {run.checks} predicate/oracle comparisons")
    for label, z, alg, rep in run.disagreements:
        kind = "far ray" if rep.far_ray_case else "unexplained"
        res.check(False, f"{alg.value} {label} {z}: predicate {rep.predicate_result}, oracle {rep.oracle_result} ({kind})")
    res.passed += run.checks - len(run.disagreements)
    for label, z in run.xtilde_failures:
        res.check(False, f"{label} {z}: periodic or in N1 but pair outside the tilde domain")
    res.diagnostics.append(f"{len(run.far_ray_cases)} far-ray pairs (Y_j x Y''_j)")
    res.diagnostics.append(f"{len(run.corrected_disagreements)} disagreements with the corrected sets")
    res.diagnostics.append(f"{len(run.xtilde_only)} pairs in the tilde domain but outside N1")
    res.diagnostics.append(f"{len(run.inconclusive)} inconclusive orbits")
    for (alg, verdict), n in sorted(run.verdicts.items()):
        res.diagnostics.append(f"{alg}: {n} {'purely periodic' if verdict else 'not purely periodic'}")
    return res


def suite_dual(seed: int = 0, count: int = 360) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("dual")
    found = 0
    for label, z in quadratic_population(rng, count):
        try:
            periodic, _ = purely_periodic_oracle(z, Algorithm.H)
        except InconclusiveOrbit:
            continue
        if periodic:
            found += 1
            res.check(verify_dual_reversal(z), f"dual reversal failed for {label} {z}")
    res.diagnostics.append(f"{found} purely periodic instances replayed")
    return res


def suite_rationals(seed: int = 0, count: int = 200) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("rationals")
    for _ in range(count):
        a = GaussianRational(rng.randint(-10**4, 10**4), rng.randint(-10**4, 10**4), rng.randint(1, 10**4))
        for alg in (Algorithm.H, Algorithm.T):
            a0, z = normalize_input(a, alg)
            e = expand(z, alg, initial=a0)
            if alg is Algorithm.H:
                res.check(e.status is Status.FINITE and evaluate_finite(e) == a, f"H on {a}: {e.status.value}")
            else:
                ok = e.status in (Status.FINITE, Status.MINUS_ONE_TAIL) and evaluate_finite(e) == a
                res.check(ok, f"T on {a}: {e.status.value}")
    return res


def suite_negation(seed: int = 0, count: int = 50) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("negation")
    pop = quadratic_population(rng, 2 * count)
    picks = rng.sample(pop, min(count, len(pop)))
    for label, z in picks:
        e, f = expand(z, Algorithm.H), expand(-z, Algorithm.H)
        ok = [-q.value for q in e.quotients] == [q.value for q in f.quotients] and len(e.preperiod) == len(f.preperiod)
        res.check(ok, f"negation symmetry fails for {label} {z}")
    return res


def suite_natext(seed: int = 0, count: int = 10000, injective_count: int = 500) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("natext")
    excluded = 0
    for alg in (Algorithm.T, Algorithm.H):
        n = count if alg is Algorithm.T else max(count // 10, 1)
        pairs = rational_pairs(rng, n, alg)
        pairs += [ExtPoint(z, INF) for z in (_random_in_box(rng) for _ in range(max(n // 100, 1))) if not z.is_zero()]
        for p in pairs:
            if p.w is not INF:
                res.check(density_identity_check(p.z, p.w, alg) is True, f"density identity fails at {p}")
            q = ext_step(p, alg, check=False)
            problems = step_problems(p, q, alg)
            if not problems:
                res.passed += 1
            elif on_excluded_boundary(p, q):
                excluded += 1
                res.diagnostics.append(f"{alg.value} boundary pair {p} -> {q}: {'; '.join(problems)}")
            else:
                res.check(False, f"{alg.value} at {p}: {'; '.join(problems)}")
    res.diagnostics.append(f"{excluded} step failures on boundary pairs")
    pairs = injective_pairs(rng, injective_count)
    res.check(len(pairs) >= injective_count, f"only {len(pairs)} injectivity pairs")
    rep = injectivity_sample(pairs, Algorithm.H)
    for a, b, img in rep.collisions:
        res.check(False, f"{a} and {b} both map to {img}")
    res.passed += rep.checked - len(rep.collisions)
    return res


def injective_pairs(rng: random.Random, count: int) -> list[ExtPoint]:
    """Quadratic-first pairs in the tilde domain, including pairs sharing z."""
    pop = [z for _, z in quadratic_population(rng, 160)]
    out: list[ExtPoint] = []
    seen = set()
    while len(out) < count:
        z = rng.choice(pop)
        candidates = [galois_conjugate(z), INF] + [_random_w(rng) for _ in range(3)]
        for w in candidates:
            p = ExtPoint(z, w)
            if p not in seen and in_Xtilde(p):
                seen.add(p)
                out.append(p)
    return out[:count]


def k_avoidance(m: int, n: int, shift: int = 3) -> list:
    """Shifts a+bi (|a|, |b| <= shift) with sqrt(m+ni)+a+bi on some K_j."""
    root = sqrt_element(m, n)
    bad = []
    for a in range(-shift, shift + 1):
        for b in range(-shift, shift + 1):
            z = root + gaussian_int(a, b)
            if _in_any(z, "K", range(1, 5)):
                bad.append((a, b))
    return bad


def suite_sqrt_sweep(seed: int = 0, count: int = 6) -> SuiteResult:
    """``count`` is the bound on |m| and |n|; the seed is unused."""
    res = SuiteResult("sqrt-sweep")
    for m in range(-count, count + 1):
        for n in range(-count, count + 1):
            try:
                make_field(m, n)
            except ValueError:
                continue
            for alg in (Algorithm.H, Algorithm.T):
                z = sqrt_reduced(m, n, alg)
                periodic, _ = purely_periodic_oracle(z, alg)
                res.check(periodic, f"sqrt({m}{n:+d}i) not purely periodic under {alg.value}")
            res.check(not k_avoidance(m, n), f"sqrt({m}{n:+d}i) shifted onto a K arc")
            if abs(m) >= 4 or abs(n) >= 4:
                conj = galois_conjugate(sqrt_reduced(m, n, Algorithm.H))
                res.check((abs2(conj) - 8).sign() > 0, f"conjugate bound fails for ({m}, {n})")
    return res


SUITES = {
    "tilings": (suite_tilings, 1000),
    "lemmas": (suite_lemmas, 50),
    "periodicity": (suite_periodicity, 360),
    "dual": (suite_dual, 360),
    "natext": (suite_natext, 10000),
    "sqrt-sweep": (suite_sqrt_sweep, 6),
    "rationals": (suite_rationals, 200),
    "negation": (suite_negation, 50),
}


def run_suite(name: str, seed: int = 0, count: int | None = None) -> SuiteResult:
    """Run one suite; ``all`` runs every suite at its default size (``count`` is ignored)."""
    if name == "all":
        total = SuiteResult("all")
        for key in SUITES:
            total.merge(run_suite(key, seed))
        return total
    fn, default = SUITES[name]
    return fn(seed, default if count is None else count)
