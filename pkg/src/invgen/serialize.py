"""Canonical JSON documents for certificates and reports, and their independent recheck.

Documents carry only integers and strings. Group elements are written in 1-based
cycle notation so a document can be rechecked from the group expression alone.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import comb

import numpy as np

from .gen import InvGenCertificate
from .perm import Permutation

CERT_SCHEMA = "invgen-cert/1"
DECOMP_SCHEMA = "decomp/1"
LIFT_SCHEMA = "lift/1"
DICHOTOMY_SCHEMA = "dichotomy/1"


def _plain(x):
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, np.ndarray):
        return x.tolist()
    if isinstance(x, Fraction):
        return [x.numerator, x.denominator]
    raise TypeError(f"cannot serialize {type(x).__name__}")


def dumps(doc):
    """Canonical form: sorted keys, no whitespace variation, integers only."""
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), default=_plain) + "\n"


# -- certificates ----------------------------------------------------------------------------


def _class_rows(group):
    return [
        {"index": c.index, "size": c.size, "element_order": c.element_order,
         "representative": str(group.element(c.rep_id))}
        for c in group.conjugacy_classes
    ]


def _maximal_rows(group):
    rows = []
    for j, conj in enumerate(group.maximal_classes):
        m = conj[0]
        rows.append({"index": j, "order": m.order, "conjugates": len(conj),
                     "generators": [str(group.element(g)) for g in m.gens]})
    return rows


def cert_document(group, cert, expr):
    doc = {
        "schema": CERT_SCHEMA,
        "group": expr,
        "order": group.order,
        "classes": _class_rows(group),
        "maximal_classes": _maximal_rows(group),
        "kind": cert.kind,
        "class_ids": [int(c) for c in cert.class_ids],
        "evidence": [int(e) for e in cert.evidence],
    }
    if cert.value is not None:
        doc["value"] = int(cert.value)
    if cert.refutations is not None:
        doc["refutations"] = [[[int(c) for c in combo], int(m)] for combo, m in cert.refutations]
    return doc


def _meets(group, rep_id, sub_mask):
    """Does some conjugate of ``rep_id`` lie in the subgroup? Computed by direct conjugation."""
    conjugates = group.conj(np.full(group.order, rep_id), np.arange(group.order))
    return bool(sub_mask[conjugates].any())


def recheck_cert_document(doc, order_cap=None):
    """Verify an ``invgen-cert/1`` document against a freshly built group.

    Classes are located by their representatives, maximal subgroups are regenerated
    from their listed generators and tested for maximality element by element, and
    the list of maximal classes is compared with an independent cyclic-extension
    enumeration. Returns a list of problems (empty when the document checks out).
    """
    from .expr import build, concrete
    from .group import DEFAULT_SUBGROUP_CAP

    problems = []
    if doc.get("schema") != CERT_SCHEMA:
        return [f"unexpected schema {doc.get('schema')!r}"]
    g = concrete(build(doc["group"], order_cap), order_cap)
    if g.order != doc["order"]:
        return [f"order {g.order} != {doc['order']}"]
    reps = []
    for row in doc["classes"]:
        rid = g.id_of(Permutation.parse(row["representative"], g.degree))
        size = np.unique(g.conj(np.full(g.order, rid), np.arange(g.order))).size
        if size != row["size"]:
            problems.append(f"class {row['index']} has size {size}, listed {row['size']}")
        reps.append(rid)
    if sum(r["size"] for r in doc["classes"]) != g.order:
        problems.append("class sizes do not sum to |G|")
    maxes = []
    for row in doc["maximal_classes"]:
        gens = [g.id_of(Permutation.parse(s, g.degree)) for s in row["generators"]]
        m = g.subgroup(gens)
        if m.order != row["order"] or m.order == g.order:
            problems.append(f"maximal class {row['index']} regenerates to order {m.order}")
        outside = np.flatnonzero(~m.mask)
        if not all(g.subgroup(list(m.gens) + [int(x)]).order == g.order for x in outside):
            problems.append(f"maximal class {row['index']} is not maximal")
        maxes.append(m)
    if g.order <= DEFAULT_SUBGROUP_CAP and g.order > 1:
        table = g.subgroup_class_table()
        listed = {c.key for m in maxes for c in g.subgroup_conjugates(m)}
        for e in table.maximal():
            if e.subgroup.key not in listed:
                problems.append(f"maximal subgroup of order {e.order} missing from the document")
    try:
        ids = doc["class_ids"]
        kind = doc["kind"]
        if kind == "invgen-refutation":
            m = maxes[doc["evidence"][0]]
            if not all(_meets(g, reps[c], m.mask) for c in ids):
                problems.append("refutation: some class misses the named maximal subgroup")
        elif kind in ("invgen-witness", "dI-exact"):
            if len(doc["evidence"]) != len(maxes):
                problems.append("witness must name one avoiding class per maximal class")
            for j, pos in enumerate(doc["evidence"]):
                if _meets(g, reps[ids[pos]], maxes[j].mask):
                    problems.append(f"class {ids[pos]} meets maximal class {j}")
            if kind == "dI-exact":
                value = doc["value"]
                if len(ids) != value:
                    problems.append("witness size differs from the claimed value")
                refs = doc.get("refutations")
                if refs is not None:
                    nontrivial = sum(1 for r in reps if r != 0)
                    if len(refs) != comb(nontrivial, value - 1):
                        problems.append("refutation table does not cover every smaller class set")
                    for combo, j in refs:
                        if not all(_meets(g, reps[c], maxes[j].mask) for c in combo):
                            problems.append(f"refutation row {combo} fails")
        else:
            problems.append(f"unknown certificate kind {kind!r}")
    except (IndexError, KeyError, TypeError) as exc:
        problems.append(f"malformed evidence: {exc!r}")
    return problems


def cert_from_document(doc):
    return InvGenCertificate(doc["kind"], doc["class_ids"], doc["evidence"], doc.get("value"),
                             doc.get("refutations"))


# -- reports ---------------------------------------------------------------------------------


def decomp_document(expr, order, dec, endo_dims):
    comps = []
    for c, e in zip(dec.components, endo_dims):
        comps.append({"dim": c.module.dim, "multiplicity": c.multiplicity, "endo_dim": e,
                      "trivial": c.module.is_trivial(),
                      "basis": np.vstack(c.bases).tolist()})
    return {
        "schema": DECOMP_SCHEMA,
        "group": expr,
        "order": order,
        "q": dec.p,
        "components": comps,
        "sum_n_squared": sum(c.multiplicity ** 2 for c in dec.components),
        "sum_n_dim": sum(c.multiplicity * c.module.dim for c in dec.components),
    }


def lift_document(expr, cert, top_classes=None):
    return {
        "schema": LIFT_SCHEMA,
        "group": expr,
        "kind": cert.kind,
        "r": cert.r,
        "holds": cert.holds,
        "components": [{"q": q, "dim": d, "multiplicity": n} for q, d, n in cert.components],
        "table": [{"classes": combo, "obstructed_by": j} for combo, j in cert.table],
        "counterexample": cert.counterexample,
        "top_classes": top_classes,
    }


def dichotomy_document(expr, report):
    doc = {
        "schema": DICHOTOMY_SCHEMA,
        "group": expr,
        "order": report.order,
        "min_prime": report.min_prime,
        "d": report.d,
        "d_I": report.d_I,
        "horn": report.horn,
        "passed": report.passed,
    }
    if report.horn == 2:
        doc.update({
            "q": report.q,
            "h_order": report.h_order,
            "h_d": report.h_d,
            "h_gaschutz_d": report.h_gaschutz_d,
            "h_min_prime": report.h_min_prime,
            "wedderburn_sum": report.wedderburn_sum,
            "lower_bound": lift_document(f"wr({report.q},1,{expr})", report.certificate),
            "counting": [
                {"classes": row.classes, "orders": row.orders,
                 "reciprocal_sum": row.reciprocal_sum,
                 "regular_fixed_sum": row.regular_fixed_sum,
                 "component_sum": row.component_sum}
                for row in report.counting
            ],
        })
    return doc
