"""Permutations on {0..n-1} with 1-based cycle-notation I/O.

Products act on the right, GAP style: ``x^(a*b) = (x^a)^b``, so the images of
``a * b`` are ``b[a[i]]``.
"""

from __future__ import annotations

import re
from math import lcm

from .errors import InvalidPermutation

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class Permutation:
    __slots__ = ("images", "_hash")

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        n = len(images)
        if sorted(images) != list(range(n)):
            raise InvalidPermutation(f"images {images} are not a bijection on 0..{n - 1}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, degree):
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, cycles, degree=None):
        """Build from a sequence of 0-based cycles."""
        top = max((max(c) for c in cycles if c), default=-1) + 1
        degree = top if degree is None else degree
        if degree < top:
            raise InvalidPermutation(f"cycle point {top} exceeds degree {degree}")
        images = list(range(degree))
        seen = set()
        for cyc in cycles:
            if len(set(cyc)) != len(cyc) or seen & set(cyc):
                raise InvalidPermutation(f"repeated point in cycles {cycles}")
            seen.update(cyc)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a] = b
        return cls(images)

    @classmethod
    def parse(cls, text, degree=None):
        """Parse 1-based cycle notation such as ``"(1,2,3)(4,5)"``; ``"()"`` is the identity."""
        s = text.replace(" ", "")
        if _CYCLE_RE.sub("", s):
            raise InvalidPermutation(f"malformed cycle notation {text!r}")
        cycles = []
        for body in _CYCLE_RE.findall(s):
            if not body:
                continue
            try:
                pts = [int(t) - 1 for t in body.split(",")]
            except ValueError:
                raise InvalidPermutation(f"malformed cycle {body!r}") from None
            if min(pts) < 0:
                raise InvalidPermutation("points are 1-based")
            cycles.append(pts)
        return cls.from_cycles(cycles, degree)

    @property
    def degree(self):
        return len(self.images)

    def cycles(self):
        seen = [False] * self.degree
        out = []
        for i in range(self.degree):
            if seen[i] or self.images[i] == i:
                continue
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def __str__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + ",".join(str(p + 1) for p in c) + ")" for c in cyc)

    def __repr__(self):
        return f"Permutation({self})"

    def __mul__(self, other):
        if self.degree != other.degree:
            raise InvalidPermutation("degree mismatch")
        return Permutation(other.images[i] for i in self.images)

    def __invert__(self):
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    inverse = __invert__

    def __pow__(self, k):
        if k < 0:
            return (~self) ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return self._hash

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images))

    def order(self):
        return lcm(*(len(c) for c in self.cycles())) if not self.is_identity() else 1

    def extend(self, degree):
        if degree < self.degree:
            raise InvalidPermutation("cannot shrink a permutation")
        return Permutation(self.images + tuple(range(self.degree, degree)))
