"""Self-contained invariant suites, one per module family.

Each check returns (name, ok, detail).  run_all(max_p) sizes the sweeps
from a single knob so `verify --max-p 300` stays fast while larger caps
dig deeper.  These are the same invariants the test suite pins down; the
CLI form exists so a build can be validated without pytest.
"""

from __future__ import annotations

import random

from . import counting, identities, orbits, quotient, sampler
from . import theta as theta_mod
from .modmath import (inv_mod, legendre, pow_mod, primes_in_range,
                      roots_of_unity3, solve_unit_equation)

Check = tuple[str, bool, str]


def _euler_legendre(a: int, p: int) -> int:
    t = pow_mod(a % p, (p - 1) // 2, p)
    return -1 if t == p - 1 else t


def check_mulmod_reference(n_triples: int = 100_000, seed: int = 0) -> Check:
    """a*b mod m against an independent split-limb route."""
    rng = random.Random(seed)
    for _ in range(n_triples):
        m = rng.randrange(2, 1 << 62)
        a = rng.randrange(m)
        b = rng.randrange(m)
        hi, lo = divmod(a, 1 << 31)
        split = ((hi * b % m) * ((1 << 31) % m) + lo * b) % m
        if a * b % m != split:
            return "mulmod-reference", False, f"a={a} b={b} m={m}"
    return "mulmod-reference", True, f"{n_triples} random triples"


def check_legendre_euler(max_p: int) -> Check:
    cap = min(max_p, 1000)
    for p in primes_in_range(3, cap):
        for a in range(p):
            if legendre(a, p) != _euler_legendre(a, p):
                return "legendre-euler", False, f"p={p} a={a}"
    return "legendre-euler", True, f"all residues, p <= {cap}"


def check_unit_equation(max_p: int, seed: int = 1) -> Check:
    rng = random.Random(seed)
    cap = min(max_p, 10_000)
    primes = primes_in_range(3, cap)
    for _ in range(2000):
        ell = rng.choice(primes)
        r = rng.randrange(2, max(3, cap))
        if r % ell == 0:
            continue
        u, v = solve_unit_equation(r, ell)
        if not (r * v - ell * u == 1 and 0 < u < r and 0 < v < ell):
            return "unit-equation", False, f"r={r} ell={ell}"
    return "unit-equation", True, "2000 random pairs"


def check_roots_of_unity(max_p: int) -> Check:
    for p in primes_in_range(5, max_p):
        roots = roots_of_unity3(p)
        if p % 3 == 1:
            if roots is None:
                return "cube-roots", False, f"p={p} missing roots"
            s0, s1 = roots
            if (s0 * s0 + s0 + 1) % p or (s1 * s1 + s1 + 1) % p or not s0 < s1:
                return "cube-roots", False, f"p={p} roots={roots}"
        elif roots is not None:
            return "cube-roots", False, f"p={p} spurious roots"
    return "cube-roots", True, f"p <= {max_p}"


def check_quotient_multiplicativity(max_p: int, seed: int = 2) -> Check:
    rng = random.Random(seed)
    cap = min(max_p, 1000)
    for p in primes_in_range(3, cap):
        pp = p * p
        for _ in range(30):
            u = rng.randrange(1, pp)
            v = rng.randrange(1, pp)
            if u % p == 0 or v % p == 0:
                continue
            lhs = quotient.fermat_quotient(u * v, p)
            rhs = (quotient.fermat_quotient(u, p) + quotient.fermat_quotient(v, p)) % p
            if lhs != rhs:
                return "quotient-multiplicativity", False, f"p={p} u={u} v={v}"
    return "quotient-multiplicativity", True, f"30 pairs per p <= {cap}"


def check_shift_identity(max_p: int) -> Check:
    cap = min(max_p, 200)
    for p in primes_in_range(3, cap):
        for u in range(1, p):
            base = quotient.fermat_quotient(u, p)
            iu = inv_mod(u, p)
            for v in range(p):
                expect = (base - v * iu) % p
                if quotient.shift_identity(u, v, p) != expect:
                    return "shift-identity", False, f"p={p} u={u} v={v} (formula)"
                if quotient.fermat_quotient(u + v * p, p) != expect:
                    return "shift-identity", False, f"p={p} u={u} v={v} (direct)"
    return "shift-identity", True, f"all (u, v), p <= {cap}"


def check_quotient_periodicity(max_p: int, seed: int = 3) -> Check:
    rng = random.Random(seed)
    primes = primes_in_range(3, max(5, min(max_p, 10_000)))
    for _ in range(200):
        p = rng.choice(primes)
        u = rng.randrange(1, p * p)
        if u % p == 0:
            continue
        if quotient.fermat_quotient(u, p) != quotient.fermat_quotient(u + p * p, p):
            return "quotient-periodicity", False, f"p={p} u={u}"
    return "quotient-periodicity", True, "200 random (p, u)"


def check_table_vs_direct(max_p: int) -> Check:
    cap = min(max_p, 2000)
    for p in primes_in_range(3, cap):
        table = quotient.build_table(p, p - 1)
        for w in range(1, p):
            if table[w] != quotient.fermat_quotient(w, p):
                return "table-vs-direct", False, f"p={p} w={w}"
    return "table-vs-direct", True, f"entrywise, p <= {cap}"


def check_theta_oracle(max_p: int) -> Check:
    cap = min(max_p, 500)
    for p in primes_in_range(5, cap):
        for s in range(1, p - 1):
            if theta_mod.theta_direct(p, s) != theta_mod.theta_oracle(p, s):
                return "theta-oracle", False, f"p={p} s={s}"
    return "theta-oracle", True, f"exhaustive, p <= {cap}"


def check_theta_wieferich_form(max_p: int) -> Check:
    cap = min(max_p, 10_000)
    for p in primes_in_range(5, cap):
        want = legendre(-2 * quotient.fermat_quotient(2, p), p)
        if theta_mod.theta_direct(p, 1) != want:
            return "theta-at-1", False, f"p={p}"
    return "theta-at-1", True, f"p <= {cap}"


def check_theta_periodicity(max_p: int) -> Check:
    cap = min(max_p, 300)
    for p in primes_in_range(5, cap):
        for s in range(1, p - 1):
            base = theta_mod.theta_direct(p, s)
            for k in (1, 2):
                if theta_mod.theta_extended(p, s + k * p) != base:
                    return "theta-periodicity", False, f"p={p} s={s} k={k}"
    return "theta-periodicity", True, f"k in {{1, 2}}, p <= {cap}"


def check_group_relations(max_p: int) -> Check:
    cap = min(max_p, 2000)
    for p in primes_in_range(5, cap):
        inv = orbits._inverse_table(p)
        for s in range(1, p - 1):
            f = p - 1 - s
            if p - 1 - f != s or inv[inv[s]] != s:
                return "group-relations", False, f"p={p} s={s} involution"
            # (FG)^3 = id
            t = s
            for _ in range(3):
                t = inv[p - 1 - t]
            if t != s:
                return "group-relations", False, f"p={p} s={s} braid"
    return "group-relations", True, f"pointwise, p <= {cap}"


def check_orbit_counts(max_p: int) -> Check:
    cap = min(max_p, 10_000)
    for p in primes_in_range(11, cap):
        d = orbits.decompose(p)
        if len(d) != orbits.expected_orbit_count(p):
            return "orbit-counts", False, f"p={p}: {len(d)} orbits"
        total = sum(o.size for o in d.orbits)
        if total != p - 2:
            return "orbit-counts", False, f"p={p}: partition covers {total}"
    return "orbit-counts", True, f"11 <= p <= {cap}"


def check_theta_constant_on_orbits(max_p: int) -> Check:
    cap = min(max_p, 2000)
    for p in primes_in_range(5, cap):
        table = quotient.build_table(p, p - 1)
        for orbit in orbits.decompose(p).orbits:
            vals = {theta_mod.theta(p, s, table[s], table[s + 1])
                    for s in orbit.members}
            if len(vals) != 1:
                return "theta-orbit-constant", False, f"p={p} orbit={orbit.members}"
    return "theta-orbit-constant", True, f"every orbit, p <= {cap}"


def check_mode_equivalence(max_p: int, seed: int = 4) -> Check:
    cap = min(max_p, 1000)
    rng = random.Random(seed)
    primes = primes_in_range(3, cap)
    extra = primes_in_range(3, min(100_000, max(cap, 10_000)))
    sample = primes + [rng.choice(extra) for _ in range(10)]
    for p in sample:
        a = counting.count_streaming(p).counts()
        b = counting.count_table(p).counts()
        c = counting.count_orbitwise(p).counts()
        if not a == b == c:
            return "mode-equivalence", False, f"p={p}: {a} {b} {c}"
    return "mode-equivalence", True, f"p <= {cap} plus 10 random"


def check_census_residues(max_p: int) -> Check:
    cap = min(max_p, 10_000)
    for p in primes_in_range(11, cap):
        if p in (1093, 3511):
            continue
        rec = counting.count(p, "auto")
        want = 2 if p % 3 == 1 else 0
        if rec.n0 % 6 != want:
            return "census-residues", False, f"p={p} n0={rec.n0}"
    return "census-residues", True, f"11 <= p <= {cap}"


def check_hb_chain(max_p: int) -> Check:
    cap = min(max_p, 300)
    for p in primes_in_range(5, cap):
        if not identities.hb_chain_check(p):
            return "hb-chain", False, f"p={p}"
    return "hb-chain", True, f"p <= {cap}"


def check_f_at_one(max_p: int) -> Check:
    cap = min(max_p, 1000)
    for p in primes_in_range(5, cap):
        if identities.f_eval(p, 1) != 0:
            return "f-at-one", False, f"p={p}"
    return "f-at-one", True, f"p <= {cap}"


def check_discrepancy_cases() -> Check:
    cases = [([0.5], 0.5), ([0.25, 0.75], 0.25),
             ([k / 10 for k in range(1, 11)], 0.1)]
    for pts, want in cases:
        got = sampler.star_discrepancy(pts)
        if abs(got - want) > 1e-12:
            return "discrepancy-cases", False, f"{pts} -> {got}"
    return "discrepancy-cases", True, "closed-form cases"


def check_sampler_contract(seed: int = 5) -> Check:
    p = 1_000_003
    batch = sampler.run_batch(p, 200, seed)
    for s in batch.samples:
        if s.r * s.v - s.ell * s.u != 1 or not (0 < s.u < s.r and 0 < s.v < s.ell):
            return "sampler-contract", False, f"sample {s}"
        if s.theta != theta_mod.theta_oracle(p, s.s):
            return "sampler-contract", False, f"theta mismatch at s={s.s}"
    return "sampler-contract", True, "200 samples at p = 10^6 + 3"


def run_all(max_p: int = 300) -> list[Check]:
    checks = [
        check_mulmod_reference(),
        check_legendre_euler(max_p),
        check_unit_equation(max_p),
        check_roots_of_unity(max_p),
        check_quotient_multiplicativity(max_p),
        check_shift_identity(max_p),
        check_quotient_periodicity(max_p),
        check_table_vs_direct(max_p),
        check_theta_oracle(max_p),
        check_theta_wieferich_form(max_p),
        check_theta_periodicity(max_p),
        check_group_relations(max_p),
        check_orbit_counts(max_p),
        check_theta_constant_on_orbits(max_p),
        check_mode_equivalence(max_p),
        check_census_residues(max_p),
        check_hb_chain(max_p),
        check_f_at_one(max_p),
        check_discrepancy_cases(),
        check_sampler_contract(),
    ]
    return checks
