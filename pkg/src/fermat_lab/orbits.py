"""Orbit structure of s under F(s) = -1-s and G(s) = 1/s modulo p.

F and G are involutions on [1, p-2] with (FG)^3 = id, so they generate a
group of order six and every orbit has size dividing six.  The classifier
theta is constant on each orbit, which is what makes orbit-wise counting
sound.  For p >= 11 the partition consists of the single 3-orbit
{1, -1/2, -2}, the 2-orbit of roots of x^2 + x + 1 when p = 1 mod 3, and
6-orbits for everything else.
"""

from __future__ import annotations

from dataclasses import dataclass

from .modmath import inv_mod, require_prime, roots_of_unity3


class PTooSmall(ValueError):
    """The closed-form orbit count assumes p >= 11."""


@dataclass(frozen=True)
class Orbit:
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def min(self) -> int:
        return self.members[0]


@dataclass
class OrbitDecomposition:
    p: int
    orbits: list[Orbit]
    special_fixed: Orbit
    special_roots: Orbit | None

    def __len__(self) -> int:
        return len(self.orbits)


def _check_s(p, s):
    if not 1 <= s <= p - 2:
        raise ValueError(f"s = {s} outside [1, {p - 2}] for p = {p}")


def apply_F(p: int, s: int) -> int:
    """F(s) = -1 - s mod p; maps [1, p-2] onto itself."""
    _check_s(p, s)
    return p - 1 - s


def apply_G(p: int, s: int) -> int:
    """G(s) = 1/s mod p; maps [1, p-2] onto itself."""
    _check_s(p, s)
    return inv_mod(s, p)


def _orbit_members(p: int, s: int, inv_s: int, inv_f: int) -> tuple[int, ...]:
    """The six images of s under {1, F, G, FG, GF, FGF}, deduplicated."""
    f = p - 1 - s
    return tuple(sorted({s, f, inv_s, p - 1 - inv_s, inv_f, p - 1 - inv_f}))


def orbit_of(p: int, s: int) -> Orbit:
    """Orbit of s under the group generated by F and G."""
    require_prime(p)
    _check_s(p, s)
    f = p - 1 - s
    return Orbit(_orbit_members(p, s, inv_mod(s, p), inv_mod(f, p)))


def _inverse_table(p: int) -> list[int]:
    """inv[w] = w^(-1) mod p for w in [1, p-1], by the O(p) recurrence."""
    inv = [0] * p
    inv[1] = 1
    for w in range(2, p):
        inv[w] = (p - p // w) * inv[p % w] % p
    return inv


def decompose(p: int) -> OrbitDecomposition:
    """Partition [1, p-2] into orbits, sweeping upward from each unseen point.

    Sweeping ascending means each orbit is discovered at its minimum
    element, which doubles as the canonical representative.  Works for
    any p >= 5 including the degenerate coincidences below 11; the
    closed-form count of expected_orbit_count only applies from 11 up.
    """
    require_prime(p)
    if p < 5:
        raise ValueError("decompose needs p >= 5")
    inv = _inverse_table(p)
    seen = bytearray(p)
    orbits: list[Orbit] = []
    for s in range(1, p - 1):
        if seen[s]:
            continue
        members = _orbit_members(p, s, inv[s], inv[p - 1 - s])
        for e in members:
            seen[e] = 1
        orbits.append(Orbit(members))

    fixed = next(o for o in orbits if 1 in o.members)
    roots = roots_of_unity3(p)
    special_roots = None
    if roots is not None:
        special_roots = next(o for o in orbits if roots[0] in o.members)
    return OrbitDecomposition(p=p, orbits=orbits, special_fixed=fixed,
                              special_roots=special_roots)


def expected_orbit_count(p: int) -> int:
    """(p+5)/6 orbits when p = 1 mod 3, (p+1)/6 when p = 2 mod 3; p >= 11 only."""
    require_prime(p)
    if p < 11:
        raise PTooSmall(f"orbit count formula needs p >= 11, got {p}")
    return (p + 5) // 6 if p % 3 == 1 else (p + 1) // 6


def decomposition_lines(decomp: OrbitDecomposition) -> list[str]:
    """One line per orbit: 'min: m1,m2,...' (the CLI dump format)."""
    return [f"{o.min}: {','.join(map(str, o.members))}" for o in decomp.orbits]
