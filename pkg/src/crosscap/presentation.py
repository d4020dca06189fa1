"""Words in free groups and finite presentations, with text and JSON IO.

A word is a tuple of ``(name, sign)`` letters with sign +1 or -1.

Text format::

    gens: A B U
    rel: U A U^-1 A
    rel: A B = B A      # sugar for A B A^-1 B^-1

The expression syntax accepted by :func:`parse_expr` is richer (brackets and
integer powers, ``(A2 U)^2``); it is used for command-line words and for
transcribing relations, and always lowers to plain words.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

Letter = tuple[str, int]
Word = tuple[Letter, ...]

NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class PresentationError(ValueError):
    pass


# ----------------------------------------------------------------------------
# words
# ----------------------------------------------------------------------------


def free_reduce(w: Iterable[Letter]) -> Word:
    out: list[Letter] = []
    for name, e in w:
        if out and out[-1][0] == name and out[-1][1] == -e:
            out.pop()
        else:
            out.append((name, e))
    return tuple(out)


def inverse(w: Sequence[Letter]) -> Word:
    return tuple((name, -e) for name, e in reversed(w))


def mul(*ws: Sequence[Letter]) -> Word:
    return free_reduce(letter for w in ws for letter in w)


def power(w: Sequence[Letter], k: int) -> Word:
    base = tuple(w) if k >= 0 else inverse(w)
    return free_reduce(base * abs(k))


def conj(h: Sequence[Letter], w: Sequence[Letter]) -> Word:
    """``h w h^-1``."""
    return mul(h, w, inverse(h))


def commutator(a: Sequence[Letter], b: Sequence[Letter]) -> Word:
    """``a b a^-1 b^-1``."""
    return mul(a, b, inverse(a), inverse(b))


def cyclic_reduce(w: Sequence[Letter]) -> Word:
    w = list(free_reduce(w))
    while len(w) >= 2 and w[0][0] == w[-1][0] and w[0][1] == -w[-1][1]:
        w = w[1:-1]
    return tuple(w)


def letter(name: str, e: int = 1) -> Word:
    return ((name, e),)


def substitute(w: Sequence[Letter], images: Mapping[str, Sequence[Letter]]) -> Word:
    """Replace each generator by its image; letters without an image stay."""
    out: list[Letter] = []
    for name, e in w:
        if name in images:
            img = tuple(images[name])
            out.extend(img if e == 1 else inverse(img))
        else:
            out.append((name, e))
    return free_reduce(out)


def exponent_sum(w: Iterable[Letter], name: str) -> int:
    return sum(e for n, e in w if n == name)


def word_to_str(w: Sequence[Letter]) -> str:
    if not w:
        return "1"
    return " ".join(name if e == 1 else f"{name}^-1" for name, e in w)


def parse_tokens(text: str) -> Word:
    """Strict token list: ``NAME`` or ``NAME^-1`` separated by spaces; ``1`` is empty."""
    out = []
    for tok in text.split():
        if tok == "1":
            continue
        if tok.endswith("^-1"):
            name, e = tok[:-3], -1
        else:
            name, e = tok, 1
        if not NAME_RE.match(name):
            raise PresentationError(f"bad token {tok!r}")
        out.append((name, e))
    return tuple(out)


_EXPR_TOKEN = re.compile(r"\s*(?:([A-Za-z][A-Za-z0-9_]*)|(\^)\s*(-?\d+)|([()])|(1)(?![0-9])|(\S))")
_COMMUTATOR = re.compile(r"\[([^\[\],]*),([^\[\],]*)\]")


def parse_expr(text: str) -> Word:
    """Parse ``(A2 U)^2 D^-1 [A, B]``-style expressions into a reduced word.

    ``[a, b]`` denotes ``a b a^-1 b^-1``.  Juxtaposition multiplies.
    """
    while "[" in text:
        m = _COMMUTATOR.search(text)
        if not m:
            raise PresentationError(f"bad commutator in {text!r}")
        a, b = m.group(1), m.group(2)
        text = text[: m.start()] + f"(({a})({b})({a})^-1({b})^-1)" + text[m.end() :]
    text = text.strip()
    toks = []
    pos = 0
    while pos < len(text):
        m = _EXPR_TOKEN.match(text, pos)
        if not m or m.group(6):
            raise PresentationError(f"cannot parse {text!r} at {pos}")
        pos = m.end()
        if m.group(1):
            toks.append(("name", m.group(1)))
        elif m.group(2):
            toks.append(("pow", int(m.group(3))))
        elif m.group(4):
            toks.append((m.group(4), None))
        elif m.group(5):
            toks.append(("one", None))
    word, rest = _parse_seq(toks, 0)
    if rest != len(toks):
        raise PresentationError(f"unbalanced brackets in {text!r}")
    return word


def _parse_seq(toks, i) -> tuple[Word, int]:
    parts: list[Word] = []
    while i < len(toks):
        kind, val = toks[i]
        if kind == ")":
            break
        if kind == "name":
            atom: Word = ((val, 1),)
            i += 1
        elif kind == "one":
            atom = ()
            i += 1
        elif kind == "(":
            atom, i = _parse_seq(toks, i + 1)
            if i >= len(toks) or toks[i][0] != ")":
                raise PresentationError("unbalanced brackets")
            i += 1
        else:
            raise PresentationError("exponent without base")
        while i < len(toks) and toks[i][0] == "pow":
            atom = power(atom, toks[i][1])
            i += 1
        parts.append(atom)
    return mul(*parts), i


def parse_relations(text: str) -> list[Word]:
    """``L = M = R`` gives ``[L M^-1, M R^-1]``; a bare word gives itself."""
    sides = [parse_expr(s) for s in text.split("=")]
    if len(sides) == 1:
        return [sides[0]]
    return [mul(sides[k], inverse(sides[k + 1])) for k in range(len(sides) - 1)]


# ----------------------------------------------------------------------------
# presentations
# ----------------------------------------------------------------------------


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]
    # set when a relator was added without a derivation
    extended: bool = False

    def __post_init__(self):
        gens = tuple(self.generators)
        if len(set(gens)) != len(gens):
            raise PresentationError("duplicate generator names")
        for g in gens:
            if not NAME_RE.match(g):
                raise PresentationError(f"bad generator name {g!r}")
        known = set(gens)
        rels = []
        for r in self.relators:
            r = free_reduce(tuple((str(n), int(e)) for n, e in r))
            for n, e in r:
                if n not in known:
                    raise PresentationError(f"relator uses unknown generator {n!r}")
                if e not in (1, -1):
                    raise PresentationError("letter exponents must be +1/-1")
            rels.append(r)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", tuple(rels))

    @staticmethod
    def build(generators: Iterable[str], relations: Iterable[str]) -> "Presentation":
        """From generator names and relation strings in expression syntax."""
        rels = []
        for text in relations:
            rels.extend(parse_relations(text))
        return Presentation(tuple(generators), tuple(rels))


def to_text(p: Presentation) -> str:
    lines = ["gens: " + " ".join(p.generators)]
    for r in p.relators:
        lines.append("rel: " + word_to_str(r))
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Presentation:
    gens = None
    rels = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("gens:"):
            if gens is not None:
                raise PresentationError(f"line {lineno}: second gens line")
            gens = line[5:].split()
        elif line.startswith("rel:"):
            if gens is None:
                raise PresentationError(f"line {lineno}: rel before gens")
            body = line[4:]
            sides = body.split("=")
            if len(sides) > 2:
                raise PresentationError(f"line {lineno}: more than one '='")
            try:
                words = [parse_tokens(s) for s in sides]
            except PresentationError as exc:
                raise PresentationError(f"line {lineno}: {exc}") from None
            rels.append(words[0] if len(words) == 1 else mul(words[0], inverse(words[1])))
        else:
            raise PresentationError(f"line {lineno}: expected 'gens:' or 'rel:'")
    if gens is None:
        raise PresentationError("missing gens line")
    return Presentation(tuple(gens), tuple(rels))


def to_json(p: Presentation) -> dict:
    return {"generators": list(p.generators), "relators": [[[n, e] for n, e in r] for r in p.relators]}


def word_from_json(data) -> Word:
    try:
        return tuple((str(n), int(e)) for n, e in data)
    except (TypeError, ValueError) as exc:
        raise PresentationError(f"bad word JSON: {exc!r}") from None


def from_json(data: Mapping) -> Presentation:
    try:
        return Presentation(tuple(data["generators"]), tuple(word_from_json(r) for r in data["relators"]))
    except (KeyError, TypeError) as exc:
        raise PresentationError(f"bad presentation JSON: {exc!r}") from None


def load(path: str) -> Presentation:
    with open(path) as fh:
        text = fh.read()
    if path.endswith(".json"):
        try:
            return from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise PresentationError(str(exc)) from None
    return from_text(text)
