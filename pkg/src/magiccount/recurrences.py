"""Polynomial families for the line/cycle generating functions, plus a
machine-checkable catalog of the identities that connect them.

Two families are generated from four initial values and one recurrence,

    F_n(y) = -y [F_{n-1}(-y) + F_{n-3}(-y)] + 2 F_{n-2}(y) - F_{n-4}(y),

seeded so that ``gf_numerator(s) / gf_denominator(s)`` is the generating
function, in the size variable, of pseudo-line counts with two loops per
vertex at magic sum s.  The same polynomials arise on the matrix side:
the denominator family equals det(I - yB) for the order-(s+1) transfer
matrix B, and the numerator family equals the all-ones adjugate form of
the same matrix (the index bridge, identity ``series-bridge`` below).

Every identity is certified by exact polynomial equality over a finite
index range; a nonzero difference polynomial is reported, never rounded
away.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

from .matrices import (
    adjugate_allones_form,
    char_poly,
    det_identity_minus_y,
    mirror_tridiagonal,
    transfer_inverse,
    transfer_matrix,
)
from .poly import Poly

Y = Poly((0, 1))


class UnknownIdentity(KeyError):
    """Identity id not present in the catalog."""


_NUMERATOR_SEED = (Poly((1,)), Poly((2,)), Poly((3, -2)), Poly((4, -4, -2)))
_DENOMINATOR_SEED = (
    Poly((1, -1)),
    Poly((1, -2, -1)),
    Poly((1, -4, -2, 1)),
    Poly((1, -6, -7, 2, 1)),
)


def _family(seed: tuple[Poly, ...]) -> Callable[[int], Poly]:
    @lru_cache(maxsize=None)
    def member(n: int) -> Poly:
        if n < 0:
            raise ValueError("index must be nonnegative")
        if n < 4:
            return seed[n]
        return (
            -Y * (member(n - 1).negate_variable() + member(n - 3).negate_variable())
            + 2 * member(n - 2)
            - member(n - 4)
        )

    return member


#: Numerator family of the line-graph generating function (size variable).
gf_numerator = _family(_NUMERATOR_SEED)

#: Denominator family of the line-graph generating function.
gf_denominator = _family(_DENOMINATOR_SEED)


# -- cached matrix-side polynomials ------------------------------------------


@lru_cache(maxsize=None)
def _char_mirror(n: int, corner: int) -> Poly:
    return char_poly(mirror_tridiagonal(n, corner))


@lru_cache(maxsize=None)
def _char_inverse(n: int) -> Poly:
    return char_poly(transfer_inverse(n))


@lru_cache(maxsize=None)
def _resolvent_det(n: int) -> Poly:
    """det(I - yB) for the order-n transfer matrix B."""
    return det_identity_minus_y(transfer_matrix(n - 1))


@lru_cache(maxsize=None)
def _allones_form(n: int) -> Poly:
    """u^T adj(I - yB) u for the order-n transfer matrix B."""
    return adjugate_allones_form(transfer_matrix(n - 1))


def _parity_sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


# -- the identity catalog -----------------------------------------------------


@dataclass(frozen=True)
class Identity:
    """One certified identity: produces (lhs, rhs) pairs at index n."""

    identity_id: str
    min_index: int
    description: str
    sides: Callable[[int], list[tuple[Poly, Poly]]]


def _catalog() -> dict[str, Identity]:
    m1 = lambda n: _char_mirror(n, 1)
    m2 = lambda n: _char_mirror(n, 2)
    inv = _char_inverse
    rdet = _resolvent_det
    form = _allones_form

    entries = [
        Identity(
            "mirror1-diff-eq-mirror2-sum",
            3,
            "char(mirror1_n) - char(mirror1_{n-2}) = char(mirror2_n) + char(mirror2_{n-2})",
            lambda n: [(m1(n) - m1(n - 2), m2(n) + m2(n - 2))],
        ),
        Identity(
            "inv-step-via-mirror2",
            3,
            "char(inv_n) = (-1)^{n-1} y char(mirror2_{n-1})(-y) - char(inv_{n-2})",
            lambda n: [
                (
                    inv(n),
                    _parity_sign(n - 1) * Y * m2(n - 1).negate_variable() - inv(n - 2),
                )
            ],
        ),
        Identity(
            "inv-eq-mirror1",
            1,
            "char(inv_n) = char(mirror1_n)",
            lambda n: [(inv(n), m1(n))],
        ),
        Identity(
            "inv-from-mirror2",
            5,
            "2 char(inv_n) = char(mirror2_n) + (-1)^{n-1} y char(mirror2_{n-1})(-y)"
            " + char(mirror2_{n-2})",
            lambda n: [
                (
                    2 * inv(n),
                    m2(n)
                    + _parity_sign(n - 1) * Y * m2(n - 1).negate_variable()
                    + m2(n - 2),
                )
            ],
        ),
        Identity(
            "mirror2-only-rec",
            5,
            "char(mirror2_n) = (-1)^{n-1} y [char(mirror2_{n-1})(-y) -"
            " char(mirror2_{n-3})(-y)] - 2 char(mirror2_{n-2}) - char(mirror2_{n-4})",
            lambda n: [
                (
                    m2(n),
                    _parity_sign(n - 1)
                    * Y
                    * (m2(n - 1).negate_variable() - m2(n - 3).negate_variable())
                    - 2 * m2(n - 2)
                    - m2(n - 4),
                )
            ],
        ),
        Identity(
            "inv-only-rec",
            5,
            "same four-term recurrence for char(inv_n)",
            lambda n: [
                (
                    inv(n),
                    _parity_sign(n - 1)
                    * Y
                    * (inv(n - 1).negate_variable() - inv(n - 3).negate_variable())
                    - 2 * inv(n - 2)
                    - inv(n - 4),
                )
            ],
        ),
        Identity(
            "inv-eq-signed-det",
            1,
            "char(inv_n) = (-1)^{n(n+1)/2} det(I - yB_n)",
            lambda n: [(inv(n), _parity_sign(n * (n + 1) // 2) * rdet(n))],
        ),
        Identity(
            "det-only-rec",
            5,
            "det(I - yB_n) satisfies the signature four-term recurrence",
            lambda n: [
                (
                    rdet(n),
                    -Y * (rdet(n - 1).negate_variable() + rdet(n - 3).negate_variable())
                    + 2 * rdet(n - 2)
                    - rdet(n - 4),
                )
            ],
        ),
        Identity(
            "form-rec-via-det",
            5,
            "form_n = 2 form_{n-2} - form_{n-4} + 2 [det_{n-2} - det_{n-4}]",
            lambda n: [
                (
                    form(n),
                    2 * form(n - 2) - form(n - 4) + 2 * (rdet(n - 2) - rdet(n - 4)),
                )
            ],
        ),
        Identity(
            "form-sum-eq-mirror2",
            5,
            "form_n + form_{n-2} = (-1)^{n(n+1)/2 + 1} 2 char(mirror2_{n-2})",
            lambda n: [
                (
                    form(n) + form(n - 2),
                    _parity_sign(n * (n + 1) // 2 + 1) * 2 * m2(n - 2),
                )
            ],
        ),
        Identity(
            "det-diff-eq-form-sum",
            5,
            "2 [det_{n-2} - det_{n-4}] = -y [form_{n-1}(-y) + form_{n-3}(-y)]",
            lambda n: [
                (
                    2 * (rdet(n - 2) - rdet(n - 4)),
                    -Y * (form(n - 1).negate_variable() + form(n - 3).negate_variable()),
                )
            ],
        ),
        Identity(
            "form-only-rec",
            5,
            "the all-ones adjugate form satisfies the signature recurrence",
            lambda n: [
                (
                    form(n),
                    -Y * (form(n - 1).negate_variable() + form(n - 3).negate_variable())
                    + 2 * form(n - 2)
                    - form(n - 4),
                )
            ],
        ),
        Identity(
            "series-bridge",
            0,
            "gf_denominator(s) = det(I - yB_{s+1}) and gf_numerator(s) ="
            " allones form of B_{s+1}",
            lambda s: [
                (gf_denominator(s), rdet(s + 1)),
                (gf_numerator(s), form(s + 1)),
            ],
        ),
    ]
    return {e.identity_id: e for e in entries}


CATALOG: dict[str, Identity] = _catalog()


@dataclass(frozen=True)
class IdentityCheck:
    index: int
    holds: bool
    diff: Optional[Poly]  # lhs - rhs when the check fails


@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    start: int
    stop: int
    checks: tuple[IdentityCheck, ...]

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.checks)

    @property
    def first_failure(self) -> Optional[IdentityCheck]:
        return next((c for c in self.checks if not c.holds), None)

    def to_json_obj(self) -> dict[str, object]:
        return {
            "identity": self.identity_id,
            "start": self.start,
            "stop": self.stop,
            "checked": len(self.checks),
            "holds": self.all_hold,
            "first_failure": (
                None
                if self.first_failure is None
                else {
                    "index": self.first_failure.index,
                    "difference": self.first_failure.diff.to_text(),
                }
            ),
        }


def verify_identity(identity_id: str, stop: int = 12, start: Optional[int] = None) -> IdentityReport:
    """Check one catalog identity for every index in [start, stop].

    Indices below the identity's stated minimum are skipped, not failed.
    """
    if identity_id not in CATALOG:
        raise UnknownIdentity(identity_id)
    entry = CATALOG[identity_id]
    lo = entry.min_index if start is None else max(start, entry.min_index)
    checks = []
    for n in range(lo, stop + 1):
        diff = Poly()
        for lhs, rhs in entry.sides(n):
            delta = lhs - rhs
            if not delta.is_zero():
                diff = delta
                break
        checks.append(IdentityCheck(n, diff.is_zero(), None if diff.is_zero() else diff))
    return IdentityReport(identity_id, lo, stop, tuple(checks))


def verify_all(stop: int = 12) -> list[IdentityReport]:
    """Run the whole catalog; order is the fixed catalog order."""
    return [verify_identity(identity_id, stop) for identity_id in CATALOG]
