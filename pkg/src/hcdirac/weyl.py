"""Root systems and signed-permutation Weyl groups for types A, B and D.

Roots are stored symbolically (difference, sum or single-coordinate kind)
rather than as vectors, which keeps the positive-root ordering and the
long/short classification explicit.  Group elements are signed permutations
in window notation; reduced words come from a breadth-first search over the
Cayley graph, which is trivially correct at the desk scales this package
targets (group order at most a few thousand).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

_KIND_ORDER = {"diff": 0, "sum": 1, "short": 2}


@dataclass(frozen=True, order=False)
class Root:
    """A root e_i - e_j (diff), e_i + e_j (sum) or e_i (short)."""

    kind: str
    i: int
    j: int = 0

    def __post_init__(self):
        if self.kind not in _KIND_ORDER:
            raise ValueError(f"unknown root kind {self.kind!r}")
        if self.kind == "short":
            if self.j != 0 or self.i < 1:
                raise ValueError("short root takes a single index")
        elif not 1 <= self.i < self.j:
            raise ValueError("diff/sum roots require 1 <= i < j")

    def sort_key(self) -> tuple[int, int, int]:
        return (_KIND_ORDER[self.kind], self.i, self.j)

    def coords(self) -> dict[int, int]:
        if self.kind == "diff":
            return {self.i: 1, self.j: -1}
        if self.kind == "sum":
            return {self.i: 1, self.j: 1}
        return {self.i: 1}

    def length_sq(self) -> int:
        """|<alpha, alpha>|: 2 for diff/sum roots, 1 for short ones."""
        return 1 if self.kind == "short" else 2

    def __str__(self) -> str:
        if self.kind == "diff":
            return f"e{self.i}-e{self.j}"
        if self.kind == "sum":
            return f"e{self.i}+e{self.j}"
        return f"e{self.i}"

    @classmethod
    def parse(cls, text: str) -> Root:
        for sep, kind in (("-", "diff"), ("+", "sum")):
            if sep in text:
                left, right = text.split(sep)
                return cls(kind, int(left[1:]), int(right[1:]))
        return cls("short", int(text[1:]))


@dataclass(frozen=True)
class SignedPerm:
    """A signed permutation, stored as the window (w(1), ..., w(n))."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(abs(v) for v in self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a signed permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> SignedPerm:
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def image(self, i: int) -> int:
        """Signed image of a signed index: w(-i) = -w(i)."""
        if i > 0:
            return self.images[i - 1]
        return -self.images[-i - 1]

    def __mul__(self, other: SignedPerm) -> SignedPerm:
        """Composition (self * other)(i) = self(other(i))."""
        if self.n != other.n:
            raise ValueError("rank mismatch")
        return SignedPerm(tuple(self.image(other.images[i]) for i in range(self.n)))

    def inverse(self) -> SignedPerm:
        images = [0] * self.n
        for i, v in enumerate(self.images, start=1):
            if v > 0:
                images[v - 1] = i
            else:
                images[-v - 1] = -i
        return SignedPerm(tuple(images))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))

    def neg_count(self) -> int:
        return sum(1 for v in self.images if v < 0)

    def act_root(self, root: Root) -> tuple[Root, int]:
        """Image of a root, returned as (positive root, sign)."""
        out: dict[int, int] = {}
        for idx, coef in root.coords().items():
            v = self.image(idx)
            out[abs(v)] = coef * (1 if v > 0 else -1)
        items = sorted(out.items())
        if len(items) == 1:
            ((a, ca),) = items
            return Root("short", a), ca
        (a, ca), (b, cb) = items
        if ca == cb:
            return Root("sum", a, b), ca
        return Root("diff", a, b), ca

    def __str__(self) -> str:
        return "[" + ",".join(str(v) for v in self.images) + "]"

    @classmethod
    def parse(cls, text: str) -> SignedPerm:
        if not (text.startswith("[") and text.endswith("]")):
            raise ValueError(f"malformed window {text!r}")
        return cls(tuple(int(v) for v in text[1:-1].split(",")))


def reflection_perm(root: Root, n: int) -> SignedPerm:
    """The orthogonal reflection s_alpha as a signed permutation."""
    images = list(range(1, n + 1))
    if root.kind == "diff":
        images[root.i - 1], images[root.j - 1] = root.j, root.i
    elif root.kind == "sum":
        images[root.i - 1], images[root.j - 1] = -root.j, -root.i
    else:
        images[root.i - 1] = -root.i
    return SignedPerm(tuple(images))


class RootSystemCtx:
    """Root system data for one of R(A_{n-1}), R(B_n), R(D_n)."""

    def __init__(self, type: str, n: int):
        if type not in ("A", "B", "D"):
            raise ValueError(f"unknown type {type!r}")
        if n < 1:
            raise ValueError("rank must be at least 1")
        self.type = type
        self.n = n
        self._words: dict[tuple[int, ...], list[int]] | None = None

    def __repr__(self) -> str:
        return f"RootSystemCtx({self.type!r}, {self.n})"

    @cached_property
    def positive_roots(self) -> list[Root]:
        """Deterministic order: diff roots lexicographically, then sums, then shorts."""
        n = self.n
        roots = [Root("diff", i, j) for i in range(1, n) for j in range(i + 1, n + 1)]
        if self.type in ("B", "D"):
            roots += [Root("sum", i, j) for i in range(1, n) for j in range(i + 1, n + 1)]
        if self.type == "B":
            roots += [Root("short", i) for i in range(1, n + 1)]
        return roots

    @cached_property
    def _positive_set(self) -> frozenset[Root]:
        return frozenset(self.positive_roots)

    def contains_root(self, root: Root) -> bool:
        return root in self._positive_set

    @cached_property
    def simple_roots(self) -> list[Root]:
        n = self.n
        simples = [Root("diff", i, i + 1) for i in range(1, n)]
        if self.type == "B":
            simples.append(Root("short", n))
        elif self.type == "D" and n >= 2:
            simples.append(Root("sum", n - 1, n))
        return simples

    @cached_property
    def simple_reflections(self) -> list[SignedPerm]:
        return [reflection_perm(root, self.n) for root in self.simple_roots]

    def reflection(self, root: Root) -> SignedPerm:
        if not self.contains_root(root):
            raise ValueError(f"{root} is not a positive root of {self.type}_{self.n}")
        return reflection_perm(root, self.n)

    def act_on_root(self, w: SignedPerm, root: Root) -> tuple[Root, int]:
        if w.n != self.n:
            raise ValueError("rank mismatch")
        return w.act_root(root)

    def is_member(self, w: SignedPerm) -> bool:
        if w.n != self.n:
            return False
        if self.type == "A":
            return w.neg_count() == 0
        if self.type == "D":
            return w.neg_count() % 2 == 0
        return True

    def _build_words(self) -> dict[tuple[int, ...], list[int]]:
        """BFS over the Cayley graph; words multiply left-to-right to w."""
        identity = SignedPerm.identity(self.n)
        words: dict[tuple[int, ...], list[int]] = {identity.images: []}
        frontier = [identity]
        simples = self.simple_reflections
        while frontier:
            next_frontier = []
            for w in frontier:
                word = words[w.images]
                for idx, s in enumerate(simples):
                    w2 = w * s
                    if w2.images not in words:
                        words[w2.images] = word + [idx]
                        next_frontier.append(w2)
            frontier = next_frontier
        return words

    @cached_property
    def _word_table(self) -> dict[tuple[int, ...], list[int]]:
        return self._build_words()

    def reduced_word(self, w: SignedPerm) -> list[int]:
        """Indices into simple_reflections whose ordered product is w."""
        try:
            return list(self._word_table[w.images])
        except KeyError:
            raise ValueError(f"{w} does not lie in W({self.type}_{self.n})") from None

    def length(self, w: SignedPerm) -> int:
        return len(self.reduced_word(w))

    def elements(self) -> list[SignedPerm]:
        """All group elements, in a deterministic BFS-then-window order."""
        return [SignedPerm(images) for images in sorted(self._word_table)]

    def order(self) -> int:
        return len(self._word_table)


def positive_roots(ctx: RootSystemCtx) -> list[Root]:
    return list(ctx.positive_roots)


def reflection(ctx: RootSystemCtx, root: Root) -> SignedPerm:
    return ctx.reflection(root)


def act_on_root(w: SignedPerm, root: Root) -> tuple[Root, int]:
    return w.act_root(root)


def compose(w1: SignedPerm, w2: SignedPerm) -> SignedPerm:
    return w1 * w2


def invert(w: SignedPerm) -> SignedPerm:
    return w.inverse()


def act_index(w: SignedPerm, i: int) -> int:
    return w.image(i)


def reduced_word(ctx: RootSystemCtx, w: SignedPerm) -> list[int]:
    return ctx.reduced_word(w)
