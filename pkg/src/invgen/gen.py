"""Generation and invariable generation of concrete groups.

A multiset of conjugacy classes invariably generates ``G`` iff for every
conjugacy class of maximal subgroups ``[M]`` some chosen class misses ``M``
(a class meets some conjugate of ``M`` iff it meets ``M`` itself). Both
``d(G)`` and ``d_I(G)`` then reduce to set-cover searches over bitmasks.
"""

from __future__ import annotations

import copy
import itertools
from dataclasses import dataclass, field
from functools import reduce

import numpy as np

from .errors import BudgetExceeded

BRUTE_ORDER_BUDGET = 200
BRUTE_SIZE_BUDGET = 3
REFUTATION_LIMIT = 5_000


@dataclass
class InvGenCertificate:
    kind: str
    class_ids: list
    evidence: list = field(default_factory=list)
    value: int = None
    refutations: list = None


def _bits(bool_matrix):
    """Python-int bitmask per column of a boolean matrix (bit i = row i)."""
    n_rows, n_cols = bool_matrix.shape
    if n_rows == 0:
        return [0] * n_cols
    packed = np.packbits(bool_matrix.T, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def _cache(group):
    return group.__dict__.setdefault("_gen_cache", {})


def element_ids(group, elems):
    """Ids for a mix of ids and Permutations; raises ElementNotInGroup."""
    return [group.id_of(e) for e in elems]


def generates(group, elems):
    ids = element_ids(group, elems)
    return bool(group._closure_mask(ids).all())


def class_incidence(group):
    """``meets[c, m]``: class ``c`` intersects the maximal subgroup class ``m``."""
    cache = _cache(group)
    if "incidence" not in cache:
        classes = group.conjugacy_classes
        reps = [mc[0] for mc in group.maximal_classes]
        meets = np.zeros((len(classes), len(reps)), dtype=bool)
        for j, m in enumerate(reps):
            hit = np.unique(group.class_of[m.ids])
            meets[hit, j] = True
        cache["incidence"] = meets
    return cache["incidence"]


def _class_index(group, c):
    return c.index if hasattr(c, "index") else int(c)


def invariably_generates(group, classes):
    """Decide invariable generation for a multiset of classes; returns ``(verdict, certificate)``."""
    ids = [_class_index(group, c) for c in classes]
    meets = class_incidence(group)
    evidence = []
    for m in range(meets.shape[1]):
        avoid = [pos for pos, c in enumerate(ids) if not meets[c, m]]
        if not avoid:
            return False, InvGenCertificate("invgen-refutation", ids, [m])
        evidence.append(avoid[0])
    return True, InvGenCertificate("invgen-witness", ids, evidence)


def invariably_generates_elements(group, elems):
    ids = element_ids(group, elems)
    return invariably_generates(group, [int(group.class_of[i]) for i in ids])


def invariably_generates_bruteforce(group, elems, order_budget=BRUTE_ORDER_BUDGET,
                                    size_budget=BRUTE_SIZE_BUDGET):
    """Definitional check: every choice of conjugates generates ``G``.

    Simultaneous conjugation lets the first element stay fixed.
    """
    ids = element_ids(group, elems)
    if group.order > order_budget or len(ids) > size_budget:
        raise BudgetExceeded(f"brute force limited to |G| <= {order_budget}, |S| <= {size_budget}")
    if group.order == 1:
        return True
    if not ids:
        return False
    choices = [[ids[0]]] + [list(group.conjugacy_classes[group.class_of[i]].members) for i in ids[1:]]
    seen = set()
    for tup in itertools.product(*choices):
        key = tuple(sorted(int(t) for t in tup))
        if key in seen:
            continue
        seen.add(key)
        if not group._closure_mask(list(key)).all():
            return False
    return True


def _covering_search(masks, full, r, first_candidates=None):
    """First ``r``-combination (by position) of ``masks`` whose union is ``full``."""
    if r == 0:
        return () if full == 0 else None
    n = len(masks)
    for combo in itertools.combinations(range(n), r):
        if first_candidates is not None and combo[0] not in first_candidates:
            continue
        if reduce(lambda a, b: a | b, (masks[i] for i in combo)) == full:
            return combo
    return None


def _prune_dominated(items):
    """Keep (mask, payload) pairs whose mask is not strictly contained in another mask."""
    by_mask = {}
    for mask, payload in items:
        by_mask.setdefault(mask, payload)
    masks = list(by_mask)
    keep = [m for m in masks if not any(o != m and (m | o) == o for o in masks)]
    return [(m, by_mask[m]) for m in keep]


def _d_search(group):
    cache = _cache(group)
    if "d" in cache:
        return cache["d"]
    if group.order == 1:
        cache["d"] = (0, ())
        return cache["d"]
    maxes, _ = group.maximal_subgroups
    member = np.array([m.mask for m in maxes])
    escape = _bits(~member)
    full = (1 << len(maxes)) - 1
    # one representative element per distinct escape mask, in id order
    items = []
    seen = set()
    for x in range(group.order):
        if escape[x] not in seen:
            seen.add(escape[x])
            items.append((escape[x], x))
    items = _prune_dominated(items)
    masks = [m for m, _ in items]
    r = 1
    while True:
        combo = _covering_search(masks, full, r)
        if combo is not None:
            witness = tuple(items[i][1] for i in combo)
            if not generates(group, witness):
                raise AssertionError("covering witness fails to generate")
            cache["d"] = (r, witness)
            return cache["d"]
        r += 1


def d_min_generators(group):
    """``d(G)``, the least size of a generating set."""
    return _d_search(group)[0]


def generating_witness(group):
    return [group.element(i) for i in _d_search(group)[1]]


def _avoid_masks(group):
    meets = class_incidence(group)
    return _bits(~meets.T)


def d_I(group, with_refutations=True):
    """``d_I(G)`` with a certificate: witness classes plus refutation of every smaller set.

    The certificate is a fresh copy, so callers may modify it.
    """
    r, cert = _d_I_cached(group, with_refutations)
    return r, copy.deepcopy(cert)


def _d_I_cached(group, with_refutations):
    cache = _cache(group)
    if "dI" in cache:
        r, cert = cache["dI"]
        if with_refutations and cert.refutations is None and r > 0:
            cert.refutations = _refutation_table(group, r - 1)
        return r, cert
    if group.order == 1:
        cert = InvGenCertificate("dI-exact", [], [], value=0, refutations=[])
        cache["dI"] = (0, cert)
        return cache["dI"]
    classes = group.conjugacy_classes
    avoid = _avoid_masks(group)
    full = (1 << len(group.maximal_classes)) - 1
    order = sorted((c for c in classes if c.rep_id != 0), key=lambda c: (c.size, c.index))
    items = _prune_dominated([(avoid[c.index], c.index) for c in order])
    masks = [m for m, _ in items]
    r = max(d_min_generators(group), 1)
    while True:
        combo = _covering_search(masks, full, r)
        if combo is not None:
            break
        r += 1
    chosen = sorted(items[i][1] for i in combo)
    ok, witness = invariably_generates(group, chosen)
    assert ok
    refutations = None
    if with_refutations:
        refutations = _refutation_table(group, r - 1)
    cert = InvGenCertificate("dI-exact", chosen, witness.evidence, value=r, refutations=refutations)
    cache["dI"] = (r, cert)
    return cache["dI"]


def _refutation_table(group, size):
    """For every ``size``-set of nontrivial classes, a maximal class met by all of them."""
    nontrivial = [c.index for c in group.conjugacy_classes if c.rep_id != 0]
    meets = class_incidence(group)
    total = 1
    for i in range(size):
        total = total * (len(nontrivial) - i) // (i + 1)
    if total > REFUTATION_LIMIT:
        return None
    table = []
    for combo in itertools.combinations(nontrivial, size):
        common = np.flatnonzero(np.all(meets[list(combo)], axis=0)) if combo else np.arange(meets.shape[1])
        if common.size == 0:
            raise AssertionError(f"classes {combo} invariably generate; d_I search is inconsistent")
        table.append([list(combo), int(common[0])])
    return table


def minimal_invgen_multisets(group, include_identity=False, size=None):
    """All multisets of ``size`` classes (default ``d_I``) that invariably generate ``G``."""
    size = d_I(group, with_refutations=False)[0] if size is None else size
    classes = [c.index for c in group.conjugacy_classes if include_identity or c.rep_id != 0]
    out = []
    for combo in itertools.combinations_with_replacement(classes, size):
        if invariably_generates(group, combo)[0]:
            out.append(list(combo))
    return out


def check_certificate(group, cert):
    """Re-verify a certificate against the group's own class and maximal-subgroup data."""
    meets = class_incidence(group)
    if cert.kind == "invgen-refutation":
        m = cert.evidence[0]
        return all(meets[c, m] for c in cert.class_ids)
    if cert.kind in ("invgen-witness", "dI-exact"):
        if len(cert.evidence) != meets.shape[1]:
            return False
        ok = all(not meets[cert.class_ids[pos], m] for m, pos in enumerate(cert.evidence))
        if cert.kind == "dI-exact":
            ok &= len(cert.class_ids) == cert.value
            if cert.refutations is not None:
                ok &= all(all(meets[c, m] for c in combo) for combo, m in cert.refutations)
        return ok
    raise ValueError(f"unknown certificate kind {cert.kind}")
