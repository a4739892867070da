"""Words, anchored windows and morphisms over the alphabet {A, B, C}.

Finite words are plain ``str`` objects.  A :class:`Window` is a finite
slice of a biinfinite word together with the index of its first letter.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Tuple

__all__ = [
    "ALPHABET",
    "WordError",
    "Window",
    "Morphism",
    "check_word",
    "parse_window",
    "format_window",
    "parse_morphism",
    "format_morphism",
    "apply_morphism",
    "apply_morphism_window",
    "compose",
    "incidence_matrix",
    "parikh",
    "identity_morphism",
    "xi",
    "phi_k",
]

ALPHABET = "ABC"
_INDEX = {letter: i for i, letter in enumerate(ALPHABET)}
_WORD_RE = re.compile(r"[ABC]*\Z")


class WordError(ValueError):
    pass


def check_word(w: str) -> str:
    if not isinstance(w, str) or not _WORD_RE.match(w):
        raise WordError(f"not a word over {{A,B,C}}: {w!r}")
    return w


@dataclass(frozen=True)
class Window:
    """Letters ``u[start] u[start+1] ...`` of a biinfinite word."""

    start: int
    letters: str

    def __post_init__(self):
        check_word(self.letters)
        if not self.letters:
            raise WordError("a window holds at least one letter")

    @property
    def stop(self) -> int:
        """Index one past the last letter."""
        return self.start + len(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __getitem__(self, n: int) -> str:
        if not self.start <= n < self.stop:
            raise IndexError(f"index {n} outside window [{self.start}, {self.stop})")
        return self.letters[n - self.start]

    def slice(self, lo: int, hi: int) -> "Window":
        """Sub-window covering indices ``lo..hi`` inclusive."""
        if not (self.start <= lo <= hi < self.stop):
            raise IndexError(f"[{lo}, {hi}] not inside window [{self.start}, {self.stop})")
        return Window(lo, self.letters[lo - self.start : hi - self.start + 1])

    def __str__(self) -> str:
        return format_window(self)


def parse_window(text: str) -> Window:
    start, sep, letters = text.strip().partition(":")
    if not sep:
        raise WordError(f"window must look like '<start>:<letters>', got {text!r}")
    try:
        s = int(start)
    except ValueError:
        raise WordError(f"bad window start {start!r}") from None
    return Window(s, letters.strip())


def format_window(w: Window) -> str:
    return f"{w.start}:{w.letters}"


@dataclass(frozen=True)
class Morphism:
    """A non-erasing morphism, given by the images of A, B and C."""

    image_a: str
    image_b: str
    image_c: str

    def __post_init__(self):
        for letter, img in zip(ALPHABET, self.images):
            check_word(img)
            if not img:
                raise WordError(f"erasing image for {letter}; morphisms must be non-erasing")

    @property
    def images(self) -> Tuple[str, str, str]:
        return (self.image_a, self.image_b, self.image_c)

    def image(self, letter: str) -> str:
        return self.images[_INDEX[letter]]

    def __call__(self, w: str) -> str:
        return apply_morphism(self, w)

    def __str__(self) -> str:
        return format_morphism(self)


def parse_morphism(text: str) -> Morphism:
    """Parse ``A=<word>;B=<word>;C=<word>`` (whitespace is ignored)."""
    images = {}
    for part in re.sub(r"\s+", "", text).split(";"):
        if not part:
            continue
        key, sep, value = part.partition("=")
        if not sep or key not in _INDEX:
            raise WordError(f"bad morphism clause {part!r}; expected A=<word>;B=<word>;C=<word>")
        if key in images:
            raise WordError(f"image of {key} given twice")
        images[key] = check_word(value)
    missing = [x for x in ALPHABET if x not in images]
    if missing:
        raise WordError(f"missing image for {', '.join(missing)}")
    return Morphism(images["A"], images["B"], images["C"])


def format_morphism(m: Morphism) -> str:
    return f"A={m.image_a};B={m.image_b};C={m.image_c}"


def apply_morphism(m: Morphism, w: str) -> str:
    images = m.images
    return "".join(images[_INDEX[x]] for x in check_word(w))


def apply_morphism_window(m: Morphism, w: Window) -> Window:
    """Image of a window, keeping the image of ``u[0]`` anchored at index 0.

    The images of letters at negative indices fill the output indices just
    before 0, so the result starts at minus the total length of those images.
    """
    if not w.start <= 0 < w.stop:
        raise WordError(f"window [{w.start}, {w.stop}) does not cover index 0")
    left = w.letters[: -w.start] if w.start < 0 else ""
    left_image = apply_morphism(m, left)
    return Window(-len(left_image), left_image + apply_morphism(m, w.letters[len(left):]))


def compose(outer: Morphism, inner: Morphism) -> Morphism:
    """The morphism ``x -> outer(inner(x))``."""
    return Morphism(*(apply_morphism(outer, img) for img in inner.images))


def parikh(w: str) -> Tuple[int, int, int]:
    check_word(w)
    return (w.count("A"), w.count("B"), w.count("C"))


def incidence_matrix(m: Morphism) -> Tuple[Tuple[int, int, int], ...]:
    """Row ``i`` counts the letters A, B, C in the image of the i-th letter."""
    return tuple(parikh(img) for img in m.images)


def identity_morphism() -> Morphism:
    return Morphism("A", "B", "C")


def xi() -> Morphism:
    """The letter swap A <-> C."""
    return Morphism("C", "B", "A")


def phi_k(k: int) -> Morphism:
    """``A -> B(CB)^(k-1)``, ``B -> B(CB)^k``, ``C -> CAC``."""
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"phi_k needs an integer k >= 1, got {k!r}")
    return Morphism("B" + "CB" * (k - 1), "B" + "CB" * k, "CAC")
