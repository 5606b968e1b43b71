"""Module extensions ``A ⋊ K`` kept in structured form, and the families built from them.

A :class:`StructuredGroup` stores a concrete top group ``K`` and a socle ``A``
given as ``K``-modules, together with a chief-factor annotation. Everything the
generator-count formulas need is read off the annotation, so groups far too large
to enumerate (``C_43 ≀ (C_7 ⋊ C_3)`` has order ``43^21 * 21``) stay analysable.
Small instances can be materialized as permutation groups through the affine
action of each socle copy on its own vectors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import ceil, prod

import numpy as np
from sympy import factorint, isprime

from . import gf
from .errors import (
    HypothesisViolated,
    MissingAnnotation,
    NonCoprimePrime,
    OrderCapExceeded,
    SplittingViolation,
)
from .gen import d_min_generators
from .group import DEFAULT_ORDER_CAP, cyclic, direct_product, group_from_generators
from .modrep import (
    GModule,
    ModuleSum,
    endo_dim,
    is_irreducible,
    meataxe_decompose,
    modules_isomorphic,
    regular_module,
    smallest_splitting_prime,
)
from .perm import Permutation


@dataclass
class ChiefFactor:
    """An isomorphism type of chief factor with its counts in one chief series."""

    module: GModule
    complemented: int
    total: int

    @property
    def theta(self):
        return 0 if self.module.is_trivial() else 1

    @property
    def r(self):
        return self.module.dim // endo_dim(self.module, check=False)

    @property
    def order(self):
        return self.module.p ** self.module.dim


@dataclass
class SocleBlock:
    """``copies`` copies of ``module`` inside the socle (not necessarily irreducible)."""

    module: GModule
    copies: int


@dataclass(eq=False)
class StructuredGroup:
    top: object
    blocks: list = field(default_factory=list)
    socle: ModuleSum = None
    chief_annotation: list = None
    name: str = None
    recorded_d: int = None
    splitting_primes: list = field(default_factory=list)
    supersoluble: bool = None

    @property
    def is_leaf(self):
        return not self.blocks

    @property
    def socle_order(self):
        return prod(b.module.p ** (b.module.dim * b.copies) for b in self.blocks)

    @property
    def order(self):
        return self.socle_order * self.top.order

    @property
    def primes(self):
        return sorted(set(self.top.primes) | {b.module.p for b in self.blocks if b.copies})

    @property
    def min_prime(self):
        ps = self.primes
        return ps[0] if ps else None

    @property
    def derived_length(self):
        return structured_derived_length(self)

    def socle_module(self):
        """The whole socle as one ``K``-module."""
        mods = [b.module for b in self.blocks for _ in range(b.copies)]
        if not mods:
            return None
        if len({m.p for m in mods}) > 1:
            return None
        from .modrep import direct_sum
        return direct_sum(*mods)

    def materialize(self, order_cap=DEFAULT_ORDER_CAP):
        return materialize(self, order_cap).group

    def __repr__(self):
        return f"StructuredGroup({self.name}, order={self.order})"


# -- chief annotations -----------------------------------------------------------------


def chief_factor_module(group, upper, lower):
    """``upper/lower`` (elementary abelian, normal) as an ``F_p G``-module under conjugation."""
    index = upper.order // lower.order
    (p, k), = factorint(index).items()
    basis = []
    span = lower
    for x in upper.ids:
        if not span.mask[x]:
            basis.append(int(x))
            span = group.subgroup(list(span.gens) + [int(x)], start=span)
            if span.order == upper.order:
                break
    coords = np.full((group.order, k), -1, dtype=np.int64)
    low_ids = lower.ids
    for c in itertools.product(range(p), repeat=k):
        e = 0
        for b, cj in zip(basis, c):
            e = int(group.mul(e, group.power(b, cj)))
        coords[group.mul(low_ids, np.full(low_ids.size, e))] = c
    mats = []
    for s in group.gen_ids:
        rows = [coords[int(group.conj(b, s))] for b in basis]
        mats.append(np.array(rows, dtype=np.int64).reshape(k, k))
    return GModule.from_matrices(group, p, mats, dim=k)


def _merge(entries):
    """Group ``(module, complemented, total)`` triples by module isomorphism type."""
    out = []
    for mod, comp, total in entries:
        for cf in out:
            m = cf.module
            if m.p == mod.p and m.dim == mod.dim and modules_isomorphic(m, mod):
                cf.complemented += comp
                cf.total += total
                break
        else:
            out.append(ChiefFactor(mod, comp, total))
    return out


def leaf_annotation(group):
    """Chief factors of a concrete soluble group, with complemented counts."""
    series = group.chief_series
    layers = set(group.complemented_layers)
    entries = []
    for i in range(1, len(series)):
        mod = chief_factor_module(group, series[i], series[i - 1])
        entries.append((mod, int(i in layers), 1))
    return _merge(entries)


def leaf(group, name=None):
    ann = leaf_annotation(group) if group.order > 1 else []
    return StructuredGroup(
        top=group,
        socle=ModuleSum([]),
        chief_annotation=ann,
        name=name or group.name,
        supersoluble=group.is_supersoluble(),
    )


def _irreducible_summands(mod, copies, seed=0):
    if is_irreducible(mod, seed):
        return [(mod, copies)]
    if mod.group.order % mod.p == 0:
        return None
    return [(c.module, c.multiplicity * copies) for c in meataxe_decompose(mod, seed).components]


def _extension(top, blocks, name, seed=0):
    """Structured ``(⊕ blocks) ⋊ top`` with construction-time annotation."""
    summands = []
    for b in blocks:
        parts = _irreducible_summands(b.module, b.copies, seed)
        if parts is None:
            summands = None
            break
        summands.extend(parts)
    annotation = None
    socle = None
    if summands is not None:
        merged = _merge([(m, n, n) for m, n in summands])
        socle = ModuleSum([(cf.module, cf.complemented) for cf in merged])
        top_ann = leaf_annotation(top) if top.order > 1 else []
        annotation = _merge([(cf.module, cf.complemented, cf.total) for cf in top_ann + merged])
    supersoluble = None
    if annotation is not None:
        supersoluble = top.is_supersoluble() and all(cf.module.dim == 1 for cf in annotation)
    return StructuredGroup(top, list(blocks), socle, annotation, name, supersoluble=supersoluble)


def semidirect_module_group(v, u, group=None, name=None):
    """``V^u ⋊ G`` with ``G`` acting diagonally; ``u = 0`` gives ``G`` itself."""
    group = v.group if group is None else group
    if v.group is not group:
        raise ValueError("module is not a module for this group")
    if u == 0:
        return leaf(group, name)
    return _extension(group, [SocleBlock(v, u)], name or f"V^{u}:{group.name}")


def wreath_regular(q, m, group, name=None, seed=0):
    """``C_q^m ≀ G`` for the regular action: ``(F_q G)^m ⋊ G``."""
    if not isprime(q):
        raise ValueError(f"{q} is not prime")
    if group.order % q == 0:
        raise NonCoprimePrime(f"{q} divides |G| = {group.order}")
    reg = regular_module(group, q)
    s = _extension(group, [SocleBlock(reg, m)], name or f"wr({q},{m},{group.name})", seed)
    s.recorded_d = max(d_min_generators(group), m + 1)
    s.splitting_primes = [q]
    if (q - 1) % group.exponent == 0:
        check_splitting(reg, seed)
    return s


def check_splitting(reg, seed=0):
    """At a splitting prime the regular module must satisfy ``n_j = dim V_j`` and ``End = F``."""
    dec = meataxe_decompose(reg, seed)
    for c in dec.components:
        if c.multiplicity != c.module.dim or endo_dim(c.module, check=False) != 1:
            raise SplittingViolation(
                f"component of dim {c.module.dim} has multiplicity {c.multiplicity}, "
                f"End dim {endo_dim(c.module, check=False)}")
    if sum(n * n for n in dec.multiplicities) != reg.dim:
        raise SplittingViolation("sum of squared multiplicities differs from |G|")
    return dec


def elementary_abelian(p, d):
    return direct_product(*[cyclic(p) for _ in range(d)], name=f"C{p}^{d}")


def prop_geq_group(d):
    """``∏ V_i^{d-1} ⋊ C_2^d`` over the ``2^d - 1`` nonzero functionals of ``C_2^d``.

    ``V_i`` is the ``F_3``-line on which ``k`` acts trivially iff ``σ_i(k) = 0``.
    """
    if d < 2:
        raise HypothesisViolated("the family needs d >= 2")
    k = elementary_abelian(2, d)
    blocks = []
    for sigma in range(1, 2**d):
        mats = [np.array([[2 if (sigma >> j) & 1 else 1]]) for j in range(d)]
        line = GModule.from_matrices(k, 3, mats, name=f"sigma{sigma}", dim=1)
        blocks.append(SocleBlock(line, d - 1))
    return _extension(k, blocks, f"geq({d})")


def tower_hypothesis(d, p, l):
    return d >= 2 and isprime(p) and l >= 1 and (l - 1) * (d - 1) < p - 1


def tower_group(d, p, l, order_cap=DEFAULT_ORDER_CAP):
    """``G_1 = C_p^d`` and ``G_{k+1} = (F_q G_k)^{d-1} ⋊ G_k`` with ``q`` the least splitting prime.

    Levels below the last must be materialized, so ``l >= 3`` usually hits the cap.
    """
    if not tower_hypothesis(d, p, l):
        raise HypothesisViolated(f"need d >= 2, p prime and l < (p-1)/(d-1) + 1; got {(d, p, l)}")
    top = elementary_abelian(p, d)
    s = leaf(top, f"tower({d},{p},1)")
    primes = []
    for level in range(2, l + 1):
        if level > 2:
            top = s.materialize(order_cap)
            top.name = f"tower({d},{p},{level - 1})"
        q = smallest_splitting_prime(top)
        primes.append(q)
        s = wreath_regular(q, d - 1, top, name=f"tower({d},{p},{level})")
    s.splitting_primes = primes
    return s


def gaschutz_d(s):
    """``max_V (θ(V) + ⌈δ(V)/r(V)⌉)`` over complemented chief factor types."""
    if s.chief_annotation is None:
        raise MissingAnnotation(f"{s.name} has no chief annotation")
    vals = [cf.theta + ceil(cf.complemented / cf.r) for cf in s.chief_annotation if cf.complemented]
    return max(vals, default=0)


def structured_derived_length(s):
    """Derived length of ``A ⋊ K`` from ``D_{i+1} = [A_i, K_i] ⋊ K_i'``."""
    if s.is_leaf:
        return s.top.derived_length
    mod = s.socle_module()
    if mod is None:
        raise ValueError("socle blocks over different primes")
    k = s.top
    p = mod.p
    mats = mod.element_matrices
    k_series = k.derived_data.series
    eye = gf.identity(mod.dim)
    a_basis = eye
    length = 0
    while True:
        kk = k_series[length] if length < len(k_series) else k.trivial
        if not a_basis.shape[0] and kk.order == 1:
            return length
        if a_basis.shape[0]:
            rows = np.vstack([gf.matmul(a_basis, (mats[g] - eye) % p, p) for g in kk.ids])
            a_basis = gf.span_basis(rows, p, mod.dim)
        length += 1


# -- materialization ---------------------------------------------------------------------


def _vectors(q, dim):
    """All vectors of ``F_q^dim``, row ``c`` being the base-``q`` digits of ``c``."""
    codes = np.arange(q**dim)
    return np.stack([(codes // q**j) % q for j in range(dim)], axis=1)


@dataclass
class Materialized:
    group: object
    structure: StructuredGroup
    layout: list
    top_offset: int

    def project(self, ids):
        """Top-group ids of elements of the materialized group."""
        ids = np.atleast_1d(ids)
        top = self.structure.top
        part = self.group.perms[ids, self.top_offset:] - self.top_offset
        return top.lookup(part)

    def translation(self, ids):
        """Socle coordinates ``w`` with ``h = (k, w)``, concatenated over copies."""
        ids = np.atleast_1d(ids)
        cols = []
        for mod, off in self.layout:
            codes = self.group.perms[ids, off] - off
            cols.append(np.stack([(codes // mod.p**j) % mod.p for j in range(mod.dim)], axis=1))
        if not cols:
            return np.zeros((ids.size, 0), dtype=np.int64)
        return np.concatenate(cols, axis=1)

    def element_id(self, top_id, w):
        """Id of ``(k, w)``: ``x -> x ρ(k) + w`` on each copy."""
        top = self.structure.top
        img = np.zeros(self.group.degree, dtype=np.int64)
        o = 0
        for mod, off in self.layout:
            pts = _vectors(mod.p, mod.dim)
            moved = (gf.matmul(pts, mod.element_matrices[top_id], mod.p) + w[o:o + mod.dim]) % mod.p
            img[off:off + len(pts)] = off + moved @ (mod.p ** np.arange(mod.dim))
            o += mod.dim
        img[self.top_offset:] = top.perms[top_id] + self.top_offset
        i = int(self.group.lookup(img)[0])
        assert i >= 0
        return i


def materialize(s, order_cap=DEFAULT_ORDER_CAP):
    """Permutation image of ``s``: affine action per socle copy plus the top's own points."""
    if s.order > order_cap:
        raise OrderCapExceeded(f"{s.name} has order {s.order} > cap {order_cap}")
    if s.is_leaf:
        return Materialized(s.top, s, [], 0)
    layout = []
    off = 0
    for b in s.blocks:
        for _ in range(b.copies):
            layout.append((b.module, off))
            off += b.module.p ** b.module.dim
    top_offset = off
    degree = off + s.top.degree
    gens = []
    for j, t in enumerate(s.top.generators):
        img = np.zeros(degree, dtype=np.int64)
        for mod, o in layout:
            pts = _vectors(mod.p, mod.dim)
            moved = gf.matmul(pts, mod.gens[j], mod.p)
            img[o:o + len(pts)] = o + moved @ (mod.p ** np.arange(mod.dim))
        img[top_offset:] = np.array(t.images) + top_offset
        gens.append(Permutation(img.tolist()))
    for mod, o in layout:
        pts = _vectors(mod.p, mod.dim)
        for k in range(mod.dim):
            img = np.arange(degree)
            e = np.zeros(mod.dim, dtype=np.int64)
            e[k] = 1
            moved = (pts + e) % mod.p
            img[o:o + len(pts)] = o + moved @ (mod.p ** np.arange(mod.dim))
            gens.append(Permutation(img.tolist()))
    h = group_from_generators(gens, order_cap=order_cap, degree=degree, name=s.name)
    if h.order != s.order:
        raise AssertionError(f"materialized order {h.order} != structured order {s.order}")
    return Materialized(h, s, layout, top_offset)
