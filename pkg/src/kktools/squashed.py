"""Subsets of {1..n} in squashed (colexicographic) order.

Sets of equal size are compared by the largest element of their symmetric
difference: the set not containing it comes first.  Internally a subset is
also carried as a bitmask with bit e-1 standing for element e; for equal
sizes the squashed order coincides with numeric order of masks, which the
fast kernels rely on and the tests verify against this module's
definition-level comparator.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .binomials import binom


def mask_of(elements) -> int:
    m = 0
    for e in elements:
        m |= 1 << (e - 1)
    return m


def elements_of(mask: int) -> tuple[int, ...]:
    out = []
    e = 1
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return tuple(out)


@dataclass(frozen=True)
class Subset:
    """A subset of {1, ..., ground_n}; elements are kept sorted ascending."""

    elements: tuple[int, ...]
    ground_n: int

    def __post_init__(self):
        elems = tuple(sorted(set(self.elements)))
        if elems != tuple(self.elements):
            object.__setattr__(self, "elements", elems)
        if self.ground_n < 1:
            raise ValueError(f"ground set size must be positive, got {self.ground_n}")
        if elems and not (1 <= elems[0] and elems[-1] <= self.ground_n):
            raise ValueError(
                f"elements {elems} out of range for ground set {{1..{self.ground_n}}}")

    @classmethod
    def from_mask(cls, mask: int, ground_n: int) -> "Subset":
        return cls(elements_of(mask), ground_n)

    @property
    def mask(self) -> int:
        return mask_of(self.elements)

    @property
    def size(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, e: int) -> bool:
        return e in self.elements

    def __str__(self) -> str:
        return format_subset(self)


@dataclass(frozen=True)
class SetFamily:
    """A family of subsets of one ground set, deduplicated and in canonical
    order: sizes ascending, squashed order inside a size class."""

    members: tuple[Subset, ...]
    ground_n: int

    def __post_init__(self):
        for s in self.members:
            if s.ground_n != self.ground_n:
                raise ValueError(
                    f"member {s.elements} has ground set size {s.ground_n}, "
                    f"family has {self.ground_n}")
        canon = tuple(sorted(set(self.members), key=lambda s: (s.size, s.mask)))
        if canon != tuple(self.members):
            object.__setattr__(self, "members", canon)

    @classmethod
    def of(cls, element_sets, ground_n: int) -> "SetFamily":
        return cls(tuple(Subset(tuple(es), ground_n) for es in element_sets), ground_n)

    @classmethod
    def from_masks(cls, masks, ground_n: int) -> "SetFamily":
        return cls(tuple(Subset.from_mask(m, ground_n) for m in masks), ground_n)

    def masks(self) -> list[int]:
        return [s.mask for s in self.members]

    def sizes(self) -> set[int]:
        return {s.size for s in self.members}

    @property
    def is_uniform(self) -> bool:
        return len(self.sizes()) <= 1

    def uniform_size(self) -> int:
        sizes = self.sizes()
        if len(sizes) != 1:
            raise ValueError(f"family is not uniform (sizes {sorted(sizes)})")
        return sizes.pop()

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, s: Subset) -> bool:
        return s in self.members

    def __str__(self) -> str:
        return "{" + ", ".join(format_subset(s) for s in self.members) + "}"


def format_subset(s: Subset) -> str:
    """Text form: digit string for ground sets up to 9, braces with commas
    beyond; the empty set prints as {} in both regimes."""
    if not s.elements:
        return "{}"
    if s.ground_n <= 9:
        return "".join(str(e) for e in s.elements)
    return "{" + ",".join(str(e) for e in s.elements) + "}"


def parse_subset(text: str, ground_n: int) -> Subset:
    """Parse either text form (digit string or braces-with-commas)."""
    t = text.strip()
    if t in ("", "{}"):
        return Subset((), ground_n)
    if t.startswith("{"):
        if not t.endswith("}"):
            raise ValueError(f"unbalanced braces in subset text {text!r}")
        inner = t[1:-1].strip()
        if not inner:
            return Subset((), ground_n)
        try:
            elems = tuple(int(p) for p in inner.split(","))
        except ValueError:
            raise ValueError(f"cannot parse subset text {text!r}") from None
        return Subset(elems, ground_n)
    if "," in t or " " in t:
        try:
            elems = tuple(int(p) for p in t.replace(",", " ").split())
        except ValueError:
            raise ValueError(f"cannot parse subset text {text!r}") from None
        return Subset(elems, ground_n)
    if not t.isdigit():
        raise ValueError(f"cannot parse subset text {text!r}")
    return Subset(tuple(int(ch) for ch in t), ground_n)


def compare_squashed(a: Subset, b: Subset) -> int:
    """-1, 0, or 1 as a precedes, equals, or follows b in squashed order.

    Only sets of equal size are comparable.
    """
    if a.size != b.size:
        raise ValueError(
            f"squashed order compares sets of equal size, got {a.size} and {b.size}")
    if a.elements == b.elements:
        return 0
    diff = set(a.elements) ^ set(b.elements)
    return -1 if max(diff) in b.elements else 1


def rank(s: Subset) -> int:
    """0-based position of s among all size-|s| sets in squashed order.

    rank {s_1 < ... < s_k} = sum of C(s_i - 1, i); independent of the
    ground set.  The empty set has rank 0.
    """
    return sum(binom(e - 1, i) for i, e in enumerate(s.elements, start=1))


def unrank(m: int, n: int, k: int) -> Subset:
    """The rank-m k-subset of {1..n} in squashed order (0-based rank).

    Greedy: the largest element is a+1 for the largest a with C(a, k) <= m,
    and the process recurses on the remainder at size k-1.
    """
    if not 0 <= k <= n:
        raise ValueError(f"unrank: need 0 <= k <= n, got k={k}, n={n}")
    total = binom(n, k)
    if not 0 <= m < total:
        raise ValueError(f"unrank: rank {m} out of range [0, {total}) for n={n}, k={k}")
    elements = []
    rem = m
    for i in range(k, 0, -1):
        a = i - 1
        while binom(a + 1, i) <= rem:
            a += 1
        elements.append(a + 1)
        rem -= binom(a, i)
    return Subset(tuple(reversed(elements)), n)


def first_segment(n: int, k: int, m: int) -> SetFamily:
    """The first m k-subsets of {1..n} in squashed order."""
    total = binom(n, k)
    if not 0 <= k <= n:
        raise ValueError(f"first_segment: need 0 <= k <= n, got k={k}, n={n}")
    if not 0 <= m <= total:
        raise ValueError(f"first_segment: need 0 <= m <= {total}, got {m}")
    return SetFamily(tuple(unrank(i, n, k) for i in range(m)), n)


def segment_after(n: int, k: int, r: int, m: int) -> SetFamily:
    """m consecutive k-subsets starting at rank r in squashed order."""
    total = binom(n, k)
    if r < 0 or m < 0 or r + m > total:
        raise ValueError(
            f"segment_after: need 0 <= r, 0 <= m, r + m <= {total}, got r={r}, m={m}")
    return SetFamily(tuple(unrank(i, n, k) for i in range(r, r + m)), n)


def last_segment(n: int, k: int, m: int) -> SetFamily:
    """The last m k-subsets of {1..n} in squashed order."""
    total = binom(n, k)
    if not 0 <= m <= total:
        raise ValueError(f"last_segment: need 0 <= m <= {total}, got {m}")
    return segment_after(n, k, total - m, m)


def level_masks(n: int, k: int) -> list[int]:
    """All k-subsets of {1..n} as bitmasks, ascending (= squashed order)."""
    if not 0 <= k <= n:
        raise ValueError(f"level_masks: need 0 <= k <= n, got k={k}, n={n}")
    masks = [sum(1 << b for b in combo)
             for combo in itertools.combinations(range(n), k)]
    masks.sort()
    return masks
