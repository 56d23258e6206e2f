"""Exhaustive sweeps over {0,1}^n and X_N / Z_N driving the check functions."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .bitword import BinaryWord, all_words
from .encoding import MAX_CENSUS_N, check_conjugacy, decompose_space, max_orbit_size, orbit_size_bits
from .grot import rho_orbit_bits
from .orbitstats import (
    check_alternative_expressions,
    check_corollary_column_sums,
    check_lemma_identities,
    check_reflection,
    check_theorem1,
)
from .report import CheckReport
from .toggle import (
    MAX_TOGGLE_N,
    check_orbit_bijection,
    check_phi_symmetry,
    check_snake_rotation,
    column_sums_via_frequency,
    enumerate_X,
    enumerate_Z,
    orbit_board,
    phi_orbit_bits,
    phi_orbit_size_fast,
)

RHO_SCOPES = ("theorem1", "corollary", "reflection", "lemmas", "conjugacy", "orbit-size", "census")
TOGGLE_SCOPES = ("snake", "phi-symmetry", "frequency", "fast-size", "bijection", "z-conjecture")
SCOPES = RHO_SCOPES + TOGGLE_SCOPES
EXPERIMENTAL = {"z-conjecture"}

Progress = Callable[[str], None]


@dataclass
class SweepResult:
    scope: str
    params: dict
    checked: int = 0
    failures: list[CheckReport] = field(default_factory=list)
    experimental: bool = False

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "scope": self.scope,
            "params": self.params,
            "checked": self.checked,
            "failed": len(self.failures),
            "passed": self.passed,
            "experimental": self.experimental,
            "failures": [f.to_dict() for f in self.failures],
        }


def _orbit_reps(n: int, m: int) -> Iterable[tuple[tuple[int, ...], list[tuple[int, ...]]]]:
    seen: set[tuple[int, ...]] = set()
    for bits in all_words(n):
        if bits in seen:
            continue
        orb = rho_orbit_bits(bits, m)
        seen.update(orb)
        yield bits, orb


def _rho_sweep(result: SweepResult, scope: str, n: int, m: int) -> None:
    per_orbit = {
        "theorem1": check_theorem1,
        "corollary": check_corollary_column_sums,
        "reflection": check_reflection,
        "conjugacy": check_conjugacy,
    }
    if scope == "census":
        slow = decompose_space(n, m, cap=n)
        fast = decompose_space(n, m, fast=True, cap=n)
        rep = CheckReport("census", {"n": n, "m": m})
        rep.add("slow == fast", slow == fast)
        rep.add("sizes sum to 2^n", sum(s for _, s in slow) == 1 << n)
        biggest = max(s for _, s in slow)
        rep.add("max orbit", biggest == max_orbit_size(n, m),
                census=biggest, formula=max_orbit_size(n, m))
        result.checked += 1
        if not rep.passed:
            result.failures.append(rep)
        return
    for bits, orb in _orbit_reps(n, m):
        w = BinaryWord(bits)
        if scope in per_orbit:
            reports = [per_orbit[scope](w, m)]
        elif scope == "lemmas":
            reports = [check_lemma_identities(w, m), check_alternative_expressions(w, m)]
        elif scope == "orbit-size":
            rep = CheckReport("orbit-size", {"word": str(w), "m": m})
            for u in orb:
                fast = orbit_size_bits(u, m)
                rep.add("".join(map(str, u)), fast == len(orb), fast=fast, brute=len(orb))
            reports = [rep]
        else:
            raise ValueError(f"unknown scope {scope!r}")
        result.checked += len(orb) if scope == "orbit-size" else 1
        result.failures.extend(r for r in reports if not r.passed)


def _toggle_sweep(result: SweepResult, scope: str, N: int, m: int) -> None:
    if scope == "bijection":
        if N >= 2:
            rep = check_orbit_bijection(N, m)
            result.checked += 1
            if not rep.passed:
                result.failures.append(rep)
        return
    if scope == "z-conjecture":
        seen: set = set()
        for z in enumerate_Z(N, m, cap=N):
            if z.bits.bits in seen:
                continue
            seen.update(phi_orbit_bits(z.bits.bits, m, "Z"))
            rep = check_phi_symmetry(z)
            result.checked += 1
            if not rep.passed:
                result.failures.append(rep)
        return
    seen = set()
    for S in enumerate_X(N, m, cap=N):
        if S.bits.bits in seen:
            continue
        seen.update(phi_orbit_bits(S.bits.bits, m))
        if scope == "phi-symmetry":
            rep = check_phi_symmetry(S)
        elif scope == "snake":
            if N < 2:
                continue
            rep = check_snake_rotation(S)
        elif scope == "frequency":
            if N < 2:
                continue
            rep = CheckReport("frequency", {"word": str(S), "m": m})
            direct = orbit_board(S).column_sums().tolist()
            via = column_sums_via_frequency(S)
            rep.add("column sums", direct == via, direct=direct, via_frequency=via)
        elif scope == "fast-size":
            rep = CheckReport("fast-size", {"word": str(S), "m": m})
            q = len(phi_orbit_bits(S.bits.bits, m))
            fast = phi_orbit_size_fast(S)
            rep.add("period", q == fast, direct=q, fast=fast)
        else:
            raise ValueError(f"unknown scope {scope!r}")
        result.checked += 1
        if not rep.passed:
            result.failures.append(rep)


def run_sweep(
    scope: str,
    sizes: Iterable[int],
    ms: Iterable[int],
    progress: Progress | None = None,
    cap: int | None = None,
) -> SweepResult:
    """Run one scope over every (size, m) pair with m <= size.

    ``sizes`` are word lengths n for the rho scopes and board widths N for
    the toggle scopes.  Ranges beyond ``cap`` are refused before any work.
    """
    if scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}; choose from {', '.join(SCOPES)}")
    sizes, ms = sorted(set(sizes)), sorted(set(ms))
    if not sizes or not ms or sizes[0] < 1 or ms[0] < 1:
        raise ValueError("sizes and m values must be positive and non-empty")
    if cap is None:
        cap = MAX_CENSUS_N if scope in RHO_SCOPES else MAX_TOGGLE_N
    if sizes[-1] > cap:
        raise ValueError(f"size {sizes[-1]} exceeds the cap {cap}")
    result = SweepResult(
        scope,
        {"sizes": [sizes[0], sizes[-1]], "m": [ms[0], ms[-1]]},
        experimental=scope in EXPERIMENTAL,
    )
    sweep = _rho_sweep if scope in RHO_SCOPES else _toggle_sweep
    for size in sizes:
        for m in ms:
            if m > size:
                continue
            if progress:
                progress(f"{scope}: size={size} m={m}")
            sweep(result, scope, size, m)
    return result
