"""Dimension products over positive coroots, and their monotonicity.

``weyl_dim`` evaluates the classical product formula in exact integer
arithmetic: shift by the all-ones weight, take the product of pairings
against every positive coroot, divide by the same product at the shift
alone.  ``tensor_dim`` multiplies part dimensions of an embedded tuple.

For k = 2 the module also builds a per-coroot ledger comparing two
tuples X below Y in the window order.  Each coroot contributes the
two-factor product of its shifted pairings against the parts.  Interval
(height-one) coroots always move weakly upward along the order; a
height-two coroot can move down on its own, but the four-factor product
with its window partner recovers the inequality.  ``four_factor_rebalance``
is the exact integer fact behind that recovery step.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .posets import build_poset, maximal_element, DEFAULT_GUARD
from .roots import (Coroot, EmbeddedWeight, RootSystem, iota, pairing,
                    rho_value)
from .tuples import OrderVerdict, WeightTuple
from .weights import Weight


def bracket(w: EmbeddedWeight, h: Coroot) -> int:
    """Pairing of w shifted by the all-ones weight against h."""
    return pairing(w, h) + rho_value(h)


def weyl_dim(w: EmbeddedWeight) -> int:
    """Dimension by the product formula, exact integer division."""
    if not w.is_dominant:
        raise ValueError(f"{w} is not dominant")
    num = den = 1
    for h in w.system.coroots:
        num *= bracket(w, h)
        den *= rho_value(h)
    assert num % den == 0, "product formula must divide exactly"
    return num // den


def tensor_dim(rs: RootSystem, x: WeightTuple) -> int:
    """Product of the part dimensions after embedding into rs."""
    out = 1
    for p in x.parts:
        out *= weyl_dim(iota(p, rs))
    return out


# -- exact rebalancing facts ------------------------------------------------

def rebalance_gain(x: int, y: int) -> int:
    """(x+1)(y-1) - xy = y - x - 1.

    Nonnegative whenever 0 < x < y, zero exactly when y = x + 1: pushing
    an unbalanced positive pair toward the middle never shrinks the
    product.
    """
    return (x + 1) * (y - 1) - x * y


class RebalanceVerdict(enum.Enum):
    HOLDS_STRICT = "holds_strict"
    HOLDS_EQUAL = "holds_equal"
    NOT_APPLICABLE = "not_applicable"
    FAILS = "fails"


def four_factor_rebalance(a: int, b: int, c: int, d: int) -> RebalanceVerdict:
    """Exact verdict on a*b*c*d <= (a+1)(b-1)(c-1)(d+1).

    Applicable to positive integers with a < b < d, a < c < d and
    b - a >= d - c + 2; outside that premise the verdict is
    NOT_APPLICABLE.  Within it the comparison is evaluated literally,
    FAILS being reported if the inequality ever loses.
    """
    if min(a, b, c, d) < 1:
        return RebalanceVerdict.NOT_APPLICABLE
    if not (a < b < d and a < c < d and b - a >= d - c + 2):
        return RebalanceVerdict.NOT_APPLICABLE
    lhs = a * b * c * d
    rhs = (a + 1) * (b - 1) * (c - 1) * (d + 1)
    if lhs < rhs:
        return RebalanceVerdict.HOLDS_STRICT
    if lhs == rhs:
        return RebalanceVerdict.HOLDS_EQUAL
    return RebalanceVerdict.FAILS


# -- per-coroot ledgers for k = 2 -------------------------------------------

@dataclass(frozen=True)
class LedgerRow:
    """One inequality row comparing a low tuple against a high one.

    guaranteed: the row is asserted by the monotonicity argument.
    in_product: the row is a factor of the grand product decomposition
    (guaranteed solo rows plus grouped rows); partnered coroots appear
    solo only informationally.
    """

    label: str
    low: int
    high: int
    guaranteed: bool
    in_product: bool

    @property
    def ok(self) -> bool:
        return (not self.guaranteed) or self.low <= self.high

    def as_dict(self) -> dict:
        return {"label": self.label, "low": self.low, "high": self.high,
                "guaranteed": self.guaranteed, "in_product": self.in_product,
                "ok": self.ok}


def group_coroots(rs: RootSystem) -> tuple[list[Coroot], list[tuple[Coroot, Coroot]]]:
    """Split the positive coroots into solo rows and partnered pairs.

    A height-two coroot whose doubled block leaves room for the interval
    below it is grouped with that interval; everything else (all the
    intervals not so consumed, plus partner-less height-two coroots)
    stands solo.
    """
    grouped = []
    consumed = set()
    for h in rs.coroots:
        pc = h.window_partner_coeffs()
        if pc is None:
            continue
        partner = rs.coroot_by_coeffs(pc)
        if partner is None:
            raise RuntimeError(f"window partner of {h} missing from {rs.name}")
        grouped.append((partner, h))
        consumed.add(partner.coeffs)
        consumed.add(h.coeffs)
    solos = [h for h in rs.coroots if h.coeffs not in consumed]
    return solos, grouped


def pair_ledger(rs: RootSystem, low: WeightTuple, high: WeightTuple) -> list[LedgerRow]:
    """All ledger rows for a k = 2 pair, in coroot order then grouped rows."""
    if low.k != 2 or high.k != 2:
        raise ValueError("the coroot ledger is defined for k = 2 tuples")
    lo = [iota(p, rs) for p in low.parts]
    hi = [iota(p, rs) for p in high.parts]

    def two_factor(h: Coroot) -> tuple[int, int]:
        return (bracket(lo[0], h) * bracket(lo[1], h),
                bracket(hi[0], h) * bracket(hi[1], h))

    solos, grouped = group_coroots(rs)
    solo_set = {h.coeffs for h in solos}
    rows = []
    for h in rs.coroots:
        lv, hv = two_factor(h)
        # intervals and partner-less doubled coroots stay weakly monotone on
        # their own; a partnered doubled coroot is covered only jointly
        alone_ok = h.height == 1 or h.window_partner_coeffs() is None
        rows.append(LedgerRow(label=str(h), low=lv, high=hv,
                              guaranteed=alone_ok,
                              in_product=h.coeffs in solo_set))
    for partner, h in grouped:
        pl, ph = two_factor(partner)
        dl, dh = two_factor(h)
        rows.append(LedgerRow(label=f"{partner} & {h}", low=pl * dl,
                              high=ph * dh, guaranteed=True, in_product=True))
    return rows


def grand_product_identity(rs: RootSystem, x: WeightTuple) -> tuple[int, int]:
    """(product of all two-factor brackets, tensor_dim times rho-product squared).

    The two sides agree exactly; returned unreduced so callers can assert it.
    """
    lo = [iota(p, rs) for p in x.parts]
    total = 1
    for h in rs.coroots:
        for e in lo:
            total *= bracket(e, h)
    rp = 1
    for h in rs.coroots:
        rp *= rho_value(h)
    return total, tensor_dim(rs, x) * rp ** len(x.parts)


# -- sweep reports -----------------------------------------------------------

@dataclass
class DimensionReport:
    check: str
    system: str
    lam: tuple[int, ...]
    k: int
    details: list = field(default_factory=list)
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"check": self.check, "system": self.system,
                "lambda": list(self.lam), "k": self.k, "ok": self.ok,
                "details": self.details, "violations": self.violations}

    def to_csv_rows(self) -> list[list]:
        head = ["check", "system", "lambda", "k", "item", "ok"]
        rows = [head]
        for d in self.details:
            rows.append([self.check, self.system,
                         " ".join(str(c) for c in self.lam), self.k,
                         d.get("item", ""), d.get("ok", True)])
        return rows


def verify_monotone_k2(lam: Weight, rs: RootSystem,
                       guard: int = DEFAULT_GUARD) -> DimensionReport:
    """Strictly smaller class in the window order means strictly smaller dim.

    Also confirms every member of a class shares the representative's
    dimension product (the parts only get reordered within a class).
    """
    report = DimensionReport("monotone_k2", rs.name, lam.omega, 2)
    poset = build_poset(lam, 2, guard)
    dims = [tensor_dim(rs, cls.rep) for cls in poset.classes]
    for c, cls in enumerate(poset.classes):
        for member in cls.members:
            if tensor_dim(rs, member) != dims[c]:
                report.violations.append(
                    {"item": f"class {c} member {member}", "kind": "class_dim"})
    m = len(poset.classes)
    for a in range(m):
        for b in range(m):
            if a == b:
                continue
            if poset.verdict(a, b) is OrderVerdict.LESS:
                ok = dims[a] < dims[b]
                report.details.append(
                    {"item": f"{poset.classes[a].rep} < {poset.classes[b].rep}",
                     "low_dim": dims[a], "high_dim": dims[b], "ok": ok})
                if not ok:
                    report.violations.append(
                        {"item": f"dim({poset.classes[a].rep}) = {dims[a]} !< "
                                 f"dim({poset.classes[b].rep}) = {dims[b]}",
                         "kind": "monotone"})
    return report


def verify_coroot_inequalities_k2(lam: Weight, rs: RootSystem,
                                  guard: int = DEFAULT_GUARD) -> DimensionReport:
    """Ledger rows across every cover edge of the k = 2 quotient.

    Guaranteed rows must not lose; the grand bracket product must equal
    the dimension product times the squared rho product for every
    representative.
    """
    report = DimensionReport("coroot_ledger_k2", rs.name, lam.omega, 2)
    poset = build_poset(lam, 2, guard)
    for cls in poset.classes:
        lhs, rhs = grand_product_identity(rs, cls.rep)
        if lhs != rhs:
            report.violations.append(
                {"item": f"product identity at {cls.rep}", "kind": "identity",
                 "lhs": lhs, "rhs": rhs})
    for a, b in poset.hasse_edges:
        low, high = poset.classes[a].rep, poset.classes[b].rep
        for row in pair_ledger(rs, low, high):
            entry = row.as_dict()
            entry["item"] = f"{low} -> {high} : {row.label}"
            report.details.append(entry)
            if not row.ok:
                report.violations.append(
                    {"item": entry["item"], "kind": "ledger_row",
                     "low": row.low, "high": row.high})
    return report


def verify_max_dim(lam: Weight, k: int, rs: RootSystem,
                   guard: int = DEFAULT_GUARD) -> DimensionReport:
    """The top class holds the strict dimension maximum of the whole fiber."""
    report = DimensionReport("max_dim", rs.name, lam.omega, k)
    poset = build_poset(lam, k, guard)
    top = poset.top_index
    if poset.class_of(maximal_element(lam, k)) != top:
        report.violations.append(
            {"item": "closed-form top representative lands off the top class",
             "kind": "top_class"})
    top_dim = tensor_dim(rs, poset.classes[top].rep)
    report.details.append({"item": f"top {poset.classes[top].rep}",
                           "dim": top_dim, "ok": True})
    for c, cls in enumerate(poset.classes):
        if c == top:
            continue
        d = tensor_dim(rs, cls.rep)
        ok = d < top_dim
        report.details.append({"item": f"{cls.rep}", "dim": d, "ok": ok})
        if not ok:
            report.violations.append(
                {"item": f"dim({cls.rep}) = {d} !< top {top_dim}",
                 "kind": "max_dim"})
    return report
