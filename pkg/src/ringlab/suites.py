"""Named check suites, shared by the CLI and the acceptance tests."""

from __future__ import annotations

import numpy as np

from . import comparability as comp
from . import orders, posets, rickart
from .report import CheckReport
from .ring import FiniteStarRing, is_proper_involution, validate

SUITES = (
    "validate", "proper", "rickart", "order-axioms", "order-props", "ortho-props", "ssc",
    "abelian-rickart", "intervals", "compatibility", "equiv", "dominance", "gc", "pc", "gc-pc",
    "additivity", "rp-ortho", "corner-gc", "quotient-gc", "decomposition",
)


def parse_selection(text: str | None) -> list:
    """Comma-separated suite names, returned in canonical order; unknown names raise."""
    if not text or text == "all":
        return list(SUITES)
    names = [s.strip() for s in text.split(",") if s.strip()]
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite(s): {', '.join(unknown)}")
    return [s for s in SUITES if s in names]


def validate_suite(ring) -> CheckReport:
    report = CheckReport("validate")
    failed = dict(validate(ring).failures)
    for axiom in ("add_commutative", "add_associative", "add_identity", "add_inverse",
                  "mul_associative", "left_distributive", "right_distributive", "mul_identity",
                  "star_additive", "star_antimultiplicative", "star_involutive"):
        report.add(axiom, axiom not in failed, failed.get(axiom))
    return report


def proper_suite(ring) -> CheckReport:
    report = CheckReport("proper")
    ok, witness = is_proper_involution(ring)
    report.add("proper-involution", ok, None if ok else (witness,))
    return report


def rickart_suite(ring) -> CheckReport:
    cert = rickart.rickart_certificate(ring)
    report = CheckReport("rickart")
    report.add("certificate", cert.is_rickart, None if cert.is_rickart else (cert.failure_witness,))
    if not cert.is_rickart:
        return report
    star = ring.star
    bad = next(((a,) for a in ring.elements if rickart.right_projection_scan(ring, a) != [cert.rp[a]]), None)
    report.add("rp-unique", bad is None, bad)
    bad = next(((a,) for a in ring.elements if cert.lp[a] != star[cert.rp[star[a]]]), None)
    report.add("lp-is-starred-rp-of-star", bad is None, bad)
    bad = next(((a,) for a in ring.elements
                if set(rickart.right_annihilator(ring, a)) != set(ring.mul[cert.annihilator_generator[a], :].tolist())), None)
    report.add("annihilator-generated", bad is None, bad)
    try:
        rickart.projection_lattice(ring)
        report.add("lattice-formulas", True)
    except AssertionError as exc:
        report.add("lattice-formulas", False, note=str(exc))
    report.add("marovt-star-order", *orders._ok(orders.marovt_star_matrix(ring).bits != orders.star_matrix(ring).bits))
    report.add("natural-on-projections", orders.check_projection_restriction(ring).passed)
    return report


def order_axioms_suite(ring, order="natural") -> CheckReport:
    report = orders.check_partial_order(orders.relation_matrix(ring, order))
    report.name = "order-axioms"
    return report


def abelian_rickart_suite(ring) -> CheckReport:
    report = orders.check_abelian_rickart_characterization(ring)
    if report.skipped:
        return report
    report.add("marovt-star-order", *orders._ok(orders.marovt_star_matrix(ring).bits != orders.star_matrix(ring).bits))
    lemma = posets.check_orthogonal_join_lemma(ring)
    report.items.extend(lemma.items)
    return report


def gc_pc_suite(ring) -> CheckReport:
    implied = comp.check_gc_implies_pc(ring)
    report = CheckReport("gc-pc", vacuous=implied.vacuous)
    for it in implied.items:
        it.name = f"gc-implies-pc:{it.name}"
    report.items.extend(implied.items)
    equiv = comp.check_gc_pc_equivalence(ring)
    if equiv.skipped:
        report.add("gc-iff-pc", True, note=f"not checked: {equiv.reason}")
    else:
        report.items.extend(equiv.items)
    return report


def decomposition_suite(ring) -> CheckReport:
    report = comp.check_gc_decomposition_theorem(ring)
    report.items.extend(comp.check_very_orthogonal_annihilates(ring).items)
    return report


_RUNNERS = {
    "validate": validate_suite,
    "proper": proper_suite,
    "rickart": rickart_suite,
    "order-props": orders.check_order_properties,
    "ortho-props": orders.check_orthogonality_properties,
    "ssc": posets.check_ssc,
    "abelian-rickart": abelian_rickart_suite,
    "intervals": posets.check_intervals,
    "compatibility": orders.check_compatibility,
    "equiv": comp.check_equiv_relation,
    "dominance": comp.check_dominance_central,
    "gc": comp.has_gc,
    "pc": comp.has_pc,
    "gc-pc": gc_pc_suite,
    "additivity": comp.check_additivity,
    "rp-ortho": comp.check_rp_orthogonality,
    "corner-gc": comp.check_corner_gc,
    "quotient-gc": comp.check_quotient_gc,
    "decomposition": decomposition_suite,
}


def run_suite(ring: FiniteStarRing, name: str, order: str = "natural") -> CheckReport:
    if name == "order-axioms":
        return order_axioms_suite(ring, order)
    if name not in _RUNNERS:
        raise ValueError(f"unknown suite {name!r}")
    report = _RUNNERS[name](ring)
    report.name = name
    return report


def ring_summary(ring: FiniteStarRing) -> dict:
    """Fixed-schema overview used by ``ringlab report``."""
    cert = rickart.rickart_certificate(ring)
    return {
        "schema": "ringlab/1",
        "label": ring.label,
        "size": ring.size,
        "commutative": bool(np.array_equal(ring.mul, ring.mul.T)),
        "abelian": rickart.is_abelian(ring),
        "proper": is_proper_involution(ring)[0],
        "rickart": cert.is_rickart,
        "projections": len(rickart.projections(ring)),
        "maximal_elements": orders.maximal_elements(ring),
        "gc": comp.has_gc(ring).passed,
        "pc": comp.has_pc(ring).passed,
    }
