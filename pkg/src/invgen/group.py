"""Concrete finite permutation groups, enumerated element by element.

Elements are numbered ``0..|G|-1`` in breadth-first order from the identity
(id 0). Subgroups are boolean masks over those ids. Everything beyond plain
closure assumes ``|G|`` is small enough for a Cayley table.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd, lcm

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components
from sympy import factorint, isprime, primefactors

from .errors import (
    BudgetExceeded,
    ElementNotInGroup,
    InvalidPermutation,
    NotNormal,
    NotSoluble,
    OrderCapExceeded,
)
from .perm import Permutation

DEFAULT_ORDER_CAP = 20_000
DEFAULT_SUBGROUP_CAP = 2_000
TABLE_CAP = 5_000
COMPLEMENT_BUDGET = 200_000


def _key(mask):
    return np.packbits(mask).tobytes()


@dataclass(eq=False)
class Subgroup:
    group: "PermGroup"
    mask: np.ndarray
    gens: tuple = ()

    @cached_property
    def ids(self):
        return np.flatnonzero(self.mask)

    @property
    def order(self):
        return int(self.ids.size)

    @cached_property
    def key(self):
        return _key(self.mask)

    def __contains__(self, elem_id):
        return bool(self.mask[elem_id])

    def __eq__(self, other):
        return isinstance(other, Subgroup) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __le__(self, other):
        return not np.any(self.mask & ~other.mask)

    def __lt__(self, other):
        return self <= other and self.order < other.order

    def is_trivial(self):
        return self.order == 1

    def generator_perms(self):
        return [self.group.element(i) for i in self.gens]

    def __repr__(self):
        return f"Subgroup(order={self.order}, gens={list(self.gens)})"


@dataclass(eq=False)
class ConjugacyClass:
    index: int
    representative: Permutation
    rep_id: int
    members: np.ndarray
    element_order: int

    @property
    def size(self):
        return int(self.members.size)

    @property
    def member_ids(self):
        return frozenset(int(i) for i in self.members)


@dataclass
class DerivedData:
    series: list
    derived_length: int
    is_soluble: bool


@dataclass
class SubgroupClassTable:
    entries: list
    frattini: Subgroup

    def maximal(self):
        return [e for e in self.entries if e.is_maximal]


@dataclass
class SubgroupClassEntry:
    subgroup: Subgroup
    conjugates: list = field(repr=False)
    is_maximal: bool = False

    @property
    def order(self):
        return self.subgroup.order

    @property
    def generators(self):
        return self.subgroup.generator_perms()

    @property
    def conjugates_count(self):
        return len(self.conjugates)


@dataclass
class QuotientMap:
    """``G -> G/N`` realised on the right cosets of ``N``."""

    source: "PermGroup"
    kernel: Subgroup
    image: "PermGroup"
    elem_map: np.ndarray

    def __call__(self, elem_id):
        return int(self.elem_map[elem_id])

    def preimage_rep(self, q_id):
        return int(np.flatnonzero(self.elem_map == q_id)[0])

    def pull_back(self, sub):
        """Full preimage of a subgroup of the image."""
        mask = sub.mask[self.elem_map]
        gens = tuple(self.preimage_rep(i) for i in sub.gens) + tuple(self.kernel.gens)
        return Subgroup(self.source, mask, gens)


class PermGroup:
    """A finite permutation group with all elements materialized."""

    def __init__(self, generators, perms, right, parent, parent_gen, name=None):
        self.generators = tuple(generators)
        self.perms = perms
        self.right = right
        self.parent = parent
        self.parent_gen = parent_gen
        self.name = name
        self._build_index()

    # -- construction helpers -------------------------------------------------

    def _build_index(self):
        perms = self.perms
        n, deg = perms.shape
        base = []
        if n > 1:
            codes = np.zeros(n, dtype=np.int64)
            while np.unique(codes).size < n:
                best, best_count = None, -1
                for b in range(deg):
                    if b in base:
                        continue
                    c = np.unique(codes * deg + perms[:, b]).size
                    if c > best_count:
                        best, best_count = b, c
                base.append(best)
                codes = codes * deg + perms[:, best]
        self.base = base
        self._use_codes = deg ** max(len(base), 1) < 2**62
        if self._use_codes:
            codes = self._codes(perms)
            self._order_idx = np.argsort(codes, kind="stable")
            self._sorted_codes = codes[self._order_idx]
        else:
            self._dict = {perms[i, base].tobytes(): i for i in range(n)}

    def _codes(self, arr):
        deg = self.degree
        codes = np.zeros(arr.shape[0], dtype=np.int64)
        for b in self.base:
            codes = codes * deg + arr[:, b]
        return codes

    def lookup(self, arr):
        """Element ids of the permutations in the rows of ``arr``; -1 where not in G."""
        arr = np.atleast_2d(np.asarray(arr))
        if arr.shape[1] != self.degree:
            return np.full(arr.shape[0], -1)
        if self._use_codes:
            codes = self._codes(arr)
            pos = np.searchsorted(self._sorted_codes, codes)
            pos = np.minimum(pos, self.order - 1)
            ids = self._order_idx[pos]
            ok = self._sorted_codes[pos] == codes
        else:
            ids = np.array([self._dict.get(r[self.base].tobytes(), 0) for r in arr])
            ok = np.ones(len(ids), dtype=bool)
        ok &= np.all(self.perms[ids] == arr, axis=1)
        return np.where(ok, ids, -1)

    # -- basic data ----------------------------------------------------------------

    @property
    def degree(self):
        return self.perms.shape[1]

    @property
    def order(self):
        return self.perms.shape[0]

    def __len__(self):
        return self.order

    def __repr__(self):
        label = self.name or f"<{len(self.generators)} gens>"
        return f"PermGroup({label}, order={self.order}, degree={self.degree})"

    def element(self, i):
        return Permutation(self.perms[i].tolist())

    def id_of(self, g):
        if isinstance(g, (int, np.integer)):
            if not 0 <= g < self.order:
                raise ElementNotInGroup(f"element id {g} out of range")
            return int(g)
        if g.degree != self.degree:
            raise ElementNotInGroup(f"{g} has degree {g.degree}, group degree {self.degree}")
        i = int(self.lookup(np.array(g.images))[0])
        if i < 0:
            raise ElementNotInGroup(f"{g} is not in the group")
        return i

    @cached_property
    def gen_ids(self):
        return [self.id_of(g) for g in self.generators]

    @cached_property
    def table(self):
        if self.order > TABLE_CAP:
            raise OrderCapExceeded(f"Cayley table needs |G| <= {TABLE_CAP}, got {self.order}")
        n = self.order
        tt = np.empty((n, n), dtype=np.int32)
        tt[0] = np.arange(n)
        for j in range(1, n):
            tt[j] = self.right[self.parent_gen[j]][tt[self.parent[j]]]
        # tt[j, i] = e_i * e_j
        return np.ascontiguousarray(tt.T)

    def mul(self, a, b):
        a = np.asarray(a)
        b = np.asarray(b)
        if self.order <= TABLE_CAP:
            return self.table[a, b]
        a, b = np.broadcast_arrays(a, b)
        prods = np.take_along_axis(self.perms[b.ravel()], self.perms[a.ravel()], axis=1)
        return self.lookup(prods).reshape(a.shape)

    @cached_property
    def inv(self):
        return self.lookup(np.argsort(self.perms, axis=1))

    def conj(self, x, g):
        """``x^g = g^-1 x g`` on ids."""
        return self.mul(self.mul(self.inv[g], x), g)

    def commutator(self, a, b):
        return self.mul(self.mul(self.inv[a], self.inv[b]), self.mul(a, b))

    def power(self, x, k):
        r = 0
        for _ in range(k):
            r = int(self.mul(r, x))
        return r

    @cached_property
    def element_orders(self):
        ords = np.zeros(self.order, dtype=np.int64)
        ids = np.arange(self.order)
        cur = ids.copy()
        k = 1
        ords[0] = 1
        while np.any(ords == 0):
            hit = (cur == 0) & (ords == 0)
            ords[hit] = k
            cur = self.mul(cur, ids)
            k += 1
        return ords

    @cached_property
    def exponent(self):
        return lcm(*(int(o) for o in np.unique(self.element_orders)))

    @cached_property
    def primes(self):
        return sorted(primefactors(self.order))

    @property
    def min_prime(self):
        return self.primes[0] if self.primes else None

    def is_abelian(self):
        ids = self.gen_ids
        return all(self.mul(a, b) == self.mul(b, a) for a in ids for b in ids)

    # -- subgroups ----------------------------------------------------------------

    def _closure_mask(self, gen_ids, start=None, limit=None):
        mask = np.zeros(self.order, dtype=bool) if start is None else start.copy()
        mask[0] = True
        gens = np.unique(np.asarray(list(gen_ids), dtype=np.int64))
        gens = gens[gens != 0]
        if gens.size == 0:
            return mask
        frontier = np.flatnonzero(mask)
        count = frontier.size
        table = self.table
        while frontier.size:
            nxt = np.unique(table[np.ix_(frontier, gens)])
            nxt = nxt[~mask[nxt]]
            mask[nxt] = True
            count += nxt.size
            if limit is not None and count > limit:
                return None
            frontier = nxt
        return mask

    def subgroup(self, gen_ids, start=None, limit=None):
        """Subgroup generated by ``gen_ids`` (``start`` must be a subgroup contained in it)."""
        gen_ids = tuple(int(self.id_of(g)) for g in gen_ids)
        mask = self._closure_mask(gen_ids, None if start is None else start.mask, limit)
        if mask is None:
            return None
        return Subgroup(self, mask, tuple(g for g in gen_ids if g != 0))

    @cached_property
    def whole(self):
        return Subgroup(self, np.ones(self.order, dtype=bool), tuple(self.gen_ids))

    @cached_property
    def trivial(self):
        mask = np.zeros(self.order, dtype=bool)
        mask[0] = True
        return Subgroup(self, mask, ())

    def normal_closure(self, gen_ids, within=None, base=None):
        """Smallest subgroup containing ``gen_ids`` (and ``base``) normalized by ``within``."""
        within = self.whole if within is None else within
        gens = list(dict.fromkeys(int(g) for g in gen_ids))
        if base is not None:
            gens = list(dict.fromkeys(list(base.gens) + gens))
        sub = self.subgroup(gens, start=base)
        while True:
            new = []
            for s in within.gens:
                for x in sub.gens:
                    y = int(self.conj(x, s))
                    if not sub.mask[y]:
                        new.append(y)
            if not new:
                return sub
            sub = self.subgroup(list(sub.gens) + list(dict.fromkeys(new)), start=sub)

    def is_normal(self, sub, within=None):
        within = self.whole if within is None else within
        return all(sub.mask[self.conj(x, s)] for s in within.gens for x in sub.gens)

    def commutator_subgroup(self, a, b=None):
        """``[a, b]`` for subgroups normalized by each other (``b`` defaults to ``a``)."""
        b = a if b is None else b
        comms = [int(self.commutator(x, y)) for x in a.gens for y in b.gens]
        comms = [c for c in comms if c != 0]
        within = self.subgroup(list(a.gens) + list(b.gens))
        return self.normal_closure(comms, within=within)

    def conjugation_perm(self, g):
        """Permutation of ids induced by ``x -> x^g``."""
        return self.conj(np.arange(self.order), np.full(self.order, g))

    @cached_property
    def _gen_conj_perms(self):
        return [self.conjugation_perm(s) for s in self.gen_ids]

    def conjugate_subgroup(self, sub, g):
        perm = self.conjugation_perm(g)
        mask = np.zeros(self.order, dtype=bool)
        mask[perm[sub.ids]] = True
        return Subgroup(self, mask, tuple(int(perm[x]) for x in sub.gens))

    def subgroup_conjugates(self, sub):
        """All conjugates of ``sub`` (orbit under the generators)."""
        seen = {sub.key: sub}
        queue = [sub]
        while queue:
            h = queue.pop()
            for perm in self._gen_conj_perms:
                mask = np.zeros(self.order, dtype=bool)
                mask[perm[h.ids]] = True
                k = _key(mask)
                if k not in seen:
                    c = Subgroup(self, mask, tuple(int(perm[x]) for x in h.gens))
                    seen[k] = c
                    queue.append(c)
        return list(seen.values())

    def normalizer(self, sub):
        ids = np.arange(self.order)
        ok = np.ones(self.order, dtype=bool)
        for u in sub.gens:
            ok &= sub.mask[self.conj(np.full(self.order, u), ids)]
        return Subgroup(self, ok, tuple(_small_gens(self, Subgroup(self, ok))))

    def coset_reps(self, sub, within=None):
        """Representatives of the right cosets ``sub*x`` inside ``within``."""
        within = self.whole if within is None else within
        seen = np.zeros(self.order, dtype=bool)
        reps = []
        for x in within.ids:
            if seen[x]:
                continue
            reps.append(int(x))
            seen[self.mul(sub.ids, x)] = True
        return reps

    # -- classes ------------------------------------------------------------------

    @cached_property
    def conjugacy_classes(self):
        n = self.order
        if n == 1:
            comp = np.zeros(1, dtype=np.int64)
        else:
            rows = np.concatenate([np.arange(n)] * len(self._gen_conj_perms))
            cols = np.concatenate(self._gen_conj_perms) if self._gen_conj_perms else np.arange(n)
            if not self._gen_conj_perms:
                rows = np.arange(n)
            graph = coo_matrix((np.ones(rows.size), (rows, cols)), shape=(n, n))
            _, comp = connected_components(graph, directed=True, connection="weak")
        groups = {}
        for i, c in enumerate(comp):
            groups.setdefault(int(c), []).append(i)
        raw = []
        for members in groups.values():
            members = np.array(members)
            sub = self.perms[members]
            lex = np.lexsort(sub.T[::-1])[0]
            rep = int(members[lex])
            raw.append((int(self.element_orders[rep]), members.size, tuple(self.perms[rep]), rep, members))
        raw.sort(key=lambda t: t[:3])
        classes = [
            ConjugacyClass(k, self.element(rep), rep, np.sort(members), eo)
            for k, (eo, _, _, rep, members) in enumerate(raw)
        ]
        return classes

    @cached_property
    def class_of(self):
        out = np.zeros(self.order, dtype=np.int64)
        for c in self.conjugacy_classes:
            out[c.members] = c.index
        return out

    def class_mask(self, c):
        mask = np.zeros(self.order, dtype=bool)
        mask[self.conjugacy_classes[c].members] = True
        return mask

    # -- series ---------------------------------------------------------------

    @cached_property
    def derived_data(self):
        series = [self.whole]
        while True:
            nxt = self.commutator_subgroup(series[-1])
            if nxt.order == series[-1].order:
                break
            series.append(nxt)
        soluble = series[-1].order == 1
        return DerivedData(series, len(series) - 1 if soluble else -1, soluble)

    @property
    def is_soluble(self):
        return self.derived_data.is_soluble

    @property
    def derived_length(self):
        return self.derived_data.derived_length

    def require_soluble(self):
        if not self.is_soluble:
            raise NotSoluble(f"{self!r} is not soluble")

    @cached_property
    def lower_central_series(self):
        series = [self.whole]
        while True:
            cur = series[-1]
            comms = [int(self.commutator(x, s)) for x in cur.gens for s in self.gen_ids]
            nxt = self.normal_closure([c for c in comms if c])
            if nxt.order == cur.order:
                break
            series.append(nxt)
        return series

    def is_nilpotent(self):
        return self.lower_central_series[-1].order == 1

    def _minimal_normal_above(self, below, inside):
        """``M`` with ``below < M <= inside`` and ``M/below`` minimal normal in ``G/below``."""
        x = next(int(i) for i in inside.ids if not below.mask[i])
        cur = self.normal_closure([x], base=below)
        restart = True
        while restart:
            restart = False
            for z in self.coset_reps(below, within=cur):
                if below.mask[z]:
                    continue
                cand = self.normal_closure([z], base=below)
                if cand.order < cur.order:
                    cur = cand
                    restart = True
                    break
        return cur

    @cached_property
    def chief_series(self):
        """Ascending chief series ``1 = N_0 < N_1 < ... < N_k = G`` (soluble groups only)."""
        self.require_soluble()
        derived = self.derived_data.series
        series = [self.trivial]
        while series[-1].order < self.order:
            low = series[-1]
            j = max(i for i, d in enumerate(derived) if not d <= low)
            layer = self.subgroup(list(derived[j].gens) + list(low.gens), start=low)
            series.append(self._minimal_normal_above(low, layer))
        return series

    @cached_property
    def chief_factor_orders(self):
        s = self.chief_series
        return [s[i + 1].order // s[i].order for i in range(len(s) - 1)]

    def is_supersoluble(self):
        return self.is_soluble and all(len(factorint(f)) == 1 and max(factorint(f).values()) == 1
                                       for f in self.chief_factor_orders)

    # -- maximal subgroups ------------------------------------------------------

    def complements(self, upper, lower):
        """Subgroups ``M >= lower`` with ``M*upper = G`` and ``M & upper = lower``, up to
        conjugacy by ``upper``. ``upper/lower`` must be an abelian chief factor.
        """
        tops = [s for s in self.gen_ids if not upper.mask[s]]
        for t in list(reversed(tops)):
            rest = [x for x in tops if x != t]
            if self.subgroup(list(upper.gens) + rest, start=upper).order == self.order:
                tops = rest
        if not tops:
            return [lower]
        reps = np.array(self.coset_reps(lower, within=upper))
        # conjugating by upper moves the first choice within an orbit; keep one per orbit
        cands = self.mul(np.full(reps.size, tops[0]), reps)
        label = np.full(self.order, -1, dtype=np.int64)
        for i, c in enumerate(cands):
            label[self.mul(lower.ids, np.full(lower.order, c))] = i
        orbit = np.arange(reps.size)
        for n in reps:
            img = label[self.conj(cands, np.full(reps.size, n))]
            for i, j in zip(range(reps.size), img):
                ri, rj = orbit[i], orbit[j]
                while orbit[ri] != ri:
                    ri = orbit[ri]
                while orbit[rj] != rj:
                    rj = orbit[rj]
                if ri != rj:
                    orbit[max(ri, rj)] = min(ri, rj)
        first = [int(reps[i]) for i in range(reps.size) if orbit[i] == i]
        space = len(first) * reps.size ** (len(tops) - 1)
        if space > COMPLEMENT_BUDGET:
            raise BudgetExceeded(f"complement search space {space} too large")
        target = self.order * lower.order // upper.order
        found = {}
        for choice in itertools.product(first, *[reps.tolist()] * (len(tops) - 1)):
            gens = [int(self.mul(t, a)) for t, a in zip(tops, choice)]
            m = self.subgroup(list(lower.gens) + gens, start=lower, limit=target)
            if m is not None and m.order == target:
                found.setdefault(m.key, m)
        return list(found.values())

    @cached_property
    def maximal_subgroups(self):
        """All maximal subgroups, each tagged with the chief-series layer it complements."""
        series = self.chief_series
        found = {}
        for i in range(1, len(series)):
            for m in self.complements(series[i], series[i - 1]):
                if m.key in found:
                    continue
                for c in self.subgroup_conjugates(m):
                    found.setdefault(c.key, (c, i))
        return [m for m, _ in found.values()], [i for _, i in found.values()]

    @cached_property
    def maximal_classes(self):
        """Conjugacy classes of maximal subgroups as lists of conjugates."""
        maxes, _ = self.maximal_subgroups
        seen = set()
        classes = []
        for m in maxes:
            if m.key in seen:
                continue
            conj = self.subgroup_conjugates(m)
            seen.update(c.key for c in conj)
            classes.append(conj)
        classes.sort(key=lambda cl: (-cl[0].order, len(cl), cl[0].key))
        return classes

    @cached_property
    def complemented_layers(self):
        _, layers = self.maximal_subgroups
        return sorted(set(layers))

    @cached_property
    def frattini(self):
        maxes, _ = self.maximal_subgroups
        mask = np.ones(self.order, dtype=bool)
        for m in maxes:
            mask &= m.mask
        sub = Subgroup(self, mask)
        return self.subgroup(_small_gens(self, sub))

    def subgroup_class_table(self, subgroup_cap=DEFAULT_SUBGROUP_CAP):
        return subgroup_class_table(self, subgroup_cap)


def _small_gens(group, sub):
    """A short generating list for ``sub``, chosen greedily from its elements."""
    gens = []
    cur = group.trivial
    for x in sub.ids:
        if not cur.mask[x]:
            gens.append(int(x))
            cur = group.subgroup(gens, start=cur)
            if cur.order == sub.order:
                break
    return gens


def group_from_generators(gens, order_cap=DEFAULT_ORDER_CAP, degree=None, name=None):
    """Enumerate the group generated by ``gens`` (Permutations or image sequences)."""
    gens = [g if isinstance(g, Permutation) else Permutation(g) for g in gens]
    if degree is None:
        degree = max((g.degree for g in gens), default=1)
    if any(g.degree != degree for g in gens):
        if any(g.degree > degree for g in gens):
            raise InvalidPermutation("generators do not share a common degree")
        gens = [g.extend(degree) for g in gens]
    garr = [np.array(g.images, dtype=np.int32) for g in gens]
    ident = np.arange(degree, dtype=np.int32)
    elems = [ident]
    index = {ident.tobytes(): 0}
    parent = [-1]
    parent_gen = [-1]
    right = [[] for _ in gens]
    head = 0
    while head < len(elems):
        x = elems[head]
        for s, g in enumerate(garr):
            y = g[x]
            k = y.tobytes()
            j = index.get(k)
            if j is None:
                j = len(elems)
                if j >= order_cap:
                    raise OrderCapExceeded(f"group order exceeds cap {order_cap}")
                index[k] = j
                elems.append(y)
                parent.append(head)
                parent_gen.append(s)
            right[s].append(j)
        head += 1
    perms = np.array(elems, dtype=np.int32).reshape(len(elems), degree)
    right = np.array(right, dtype=np.int64).reshape(len(gens), len(elems))
    return PermGroup(gens, perms, right, np.array(parent), np.array(parent_gen), name=name)


def derived_data(group):
    return group.derived_data


def conjugacy_classes(group):
    return group.conjugacy_classes


def quotient(group, normal):
    """``G/N`` acting on right cosets of ``N``; returns a :class:`QuotientMap`."""
    if not group.is_normal(normal):
        raise NotNormal("subgroup is not normal")
    n = group.order
    coset_of = np.full(n, -1, dtype=np.int64)
    reps = []
    for x in range(n):
        if coset_of[x] >= 0:
            continue
        coset_of[group.mul(normal.ids, x)] = len(reps)
        reps.append(x)
    reps = np.array(reps)
    k = len(reps)
    gens = []
    for s in group.gen_ids:
        img = coset_of[group.mul(reps, np.full(k, s))]
        gens.append(Permutation(img.tolist()))
    image = group_from_generators(gens, degree=k, name=f"{group.name}/N" if group.name else None)
    ids = np.arange(n)
    all_imgs = coset_of[group.mul(np.broadcast_to(reps[None, :], (n, k)),
                                  np.broadcast_to(ids[:, None], (n, k)))]
    elem_map = image.lookup(all_imgs)
    return QuotientMap(group, normal, image, elem_map)


def subgroup_class_table(group, subgroup_cap=DEFAULT_SUBGROUP_CAP):
    """All subgroups up to conjugacy by cyclic extension (soluble groups)."""
    if group.order > subgroup_cap:
        raise OrderCapExceeded(f"subgroup enumeration needs |G| <= {subgroup_cap}")
    group.require_soluble()
    known = set()
    entries = []
    queue = []

    def register(sub):
        conj = group.subgroup_conjugates(sub)
        known.update(c.key for c in conj)
        entries.append(SubgroupClassEntry(sub, conj))
        queue.append(sub)

    register(group.trivial)
    while queue:
        u = queue.pop()
        norm = group.normalizer(u)
        for g in group.coset_reps(u, within=norm):
            if u.mask[g]:
                continue
            m, cur = 1, g
            while not u.mask[cur]:
                cur = int(group.mul(cur, g))
                m += 1
            if not isprime(m):
                continue
            w = group.subgroup(list(u.gens) + [g], start=u)
            if w.key not in known:
                register(w)
    entries.sort(key=lambda e: (e.order, e.subgroup.key))
    n = group.order
    for e in entries:
        if e.order == n:
            continue
        e.is_maximal = not any(
            f.order < n and f.order > e.order and f.order % e.order == 0
            and any(c <= f.subgroup for c in e.conjugates)
            for f in entries
        )
    mask = np.ones(n, dtype=bool)
    for e in entries:
        if e.is_maximal:
            for c in e.conjugates:
                mask &= c.mask
    frattini = group.subgroup(_small_gens(group, Subgroup(group, mask)))
    return SubgroupClassTable(entries, frattini)


def direct_product(*groups, name=None):
    """External direct product on the disjoint union of the points."""
    gens = []
    offset = 0
    total = sum(g.degree for g in groups)
    for g in groups:
        for s in g.generators:
            img = list(range(total))
            for i, j in enumerate(s.images):
                img[offset + i] = offset + j
            gens.append(Permutation(img))
        offset += g.degree
    order_cap = max(DEFAULT_ORDER_CAP, int(np.prod([g.order for g in groups])))
    return group_from_generators(gens, order_cap=order_cap, degree=max(total, 1), name=name)


def cyclic(n):
    return group_from_generators([Permutation([(i + 1) % n for i in range(n)])], name=f"C{n}")


def symmetric(n, order_cap=DEFAULT_ORDER_CAP):
    if n <= 1:
        return group_from_generators([], degree=1, name=f"S{n}")
    gens = [Permutation.from_cycles([[0, 1]], n), Permutation.from_cycles([list(range(n))], n)]
    return group_from_generators(gens, order_cap=order_cap, name=f"S{n}")


def alternating(n, order_cap=DEFAULT_ORDER_CAP):
    if n <= 2:
        return group_from_generators([], degree=max(n, 1), name=f"A{n}")
    gens = [Permutation.from_cycles([[i, i + 1, i + 2]], n) for i in range(n - 2)]
    return group_from_generators(gens, order_cap=order_cap, name=f"A{n}")


def dihedral(n):
    """Dihedral group of order ``2n``."""
    if n == 1:
        return cyclic(2)
    if n == 2:
        return group_from_generators(
            [Permutation.from_cycles([[0, 1], [2, 3]]), Permutation.from_cycles([[0, 2], [1, 3]])],
            name="D2")
    rot = Permutation([(i + 1) % n for i in range(n)])
    ref = Permutation([(-i) % n for i in range(n)])
    return group_from_generators([rot, ref], name=f"D{n}")


def semidirect_cyclic(n, m, k):
    """``C_n x| C_m`` with the generator of ``C_m`` acting as ``x -> x^k``."""
    if pow(k, m, n) != 1 % n or gcd(k, n) != 1:
        raise ValueError(f"x -> x^{k} does not define an action of C_{m} on C_{n}")
    act = 1
    while pow(k, act, n) != 1 % n:
        act += 1
    extra = m if act < m else 0
    a = [(i + 1) % n for i in range(n)] + list(range(n, n + extra))
    b = [(k * i) % n for i in range(n)] + [n + (j + 1) % extra for j in range(extra)]
    return group_from_generators([Permutation(a), Permutation(b)], name=f"sdc({n},{m},{k})")
