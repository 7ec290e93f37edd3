"""Katapayadi letter-numerals and bhutasamkhya word-numerals.

Both systems write numbers units-first: the first syllable or word carries
the units digit, so the extracted digit sequence is reversed before it is
read as an integer.

Katapayadi: consonants carry digit values; in a consonant cluster only the
final consonant before the vowel counts, and a syllable-final consonant
with no vowel counts nothing.  Input is romanized IAST, pre-split into
syllables.

Bhutasamkhya: whole words name digit groups ("eyes" = 2, "gods" = 33); a
two-word [digit-word, magnitude-word] phrase multiplies instead.  The
word list lives in a TSV lexicon that can be extended without code
changes.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .exact_arith import DomainError


class DecodeError(DomainError):
    """A token or word could not be decoded."""


# Classical consonant table: ka..jha = 1..9, nya = 0; .ta..dha = 1..9,
# na = 0; pa..ma = 1..5; ya..ha = 1..8.
KATAPAYADI_VALUES: Mapping[str, int] = {
    "k": 1, "kh": 2, "g": 3, "gh": 4, "ṅ": 5,
    "c": 6, "ch": 7, "j": 8, "jh": 9, "ñ": 0,
    "ṭ": 1, "ṭh": 2, "ḍ": 3, "ḍh": 4, "ṇ": 5,
    "t": 6, "th": 7, "d": 8, "dh": 9, "n": 0,
    "p": 1, "ph": 2, "b": 3, "bh": 4, "m": 5,
    "y": 1, "r": 2, "l": 3, "v": 4, "ś": 5, "ṣ": 6, "s": 7, "h": 8,
}

# First varga consonant per digit, used for canonical encoding.
_CANONICAL_SYLLABLE = {
    1: "ka", 2: "kha", 3: "ga", 4: "gha", 5: "ṅa",
    6: "ca", 7: "cha", 8: "ja", 9: "jha", 0: "ña",
}

# Longest first so digraph aspirates win over their base consonant.
_CONSONANTS = sorted(KATAPAYADI_VALUES, key=len, reverse=True)
_VOWELS = ("ai", "au", "a", "ā", "i", "ī", "u", "ū", "e", "o", "ṛ", "ṝ")
_FINALS = ("ḥ", "ṃ")


@dataclass(frozen=True)
class SyllableToken:
    text: str
    consonant_cluster: tuple[str, ...]
    vowel: str | None

    @property
    def bears_digit(self) -> bool:
        return self.vowel is not None


@dataclass(frozen=True)
class KatapayadiTable:
    values: Mapping[str, int] = field(default_factory=lambda: KATAPAYADI_VALUES)
    standalone_vowel_is_zero: bool = True


DEFAULT_TABLE = KatapayadiTable()


def _nfc(text: str) -> str:
    return unicodedata.normalize("NFC", text.strip().lower())


def parse_syllable(text: str) -> SyllableToken:
    """Split one romanized syllable into its consonant cluster and vowel.

    Accepted shape: zero or more consonants, then at most one vowel, then
    an optional visarga/anusvara.  Anything else is a decode error.
    """
    norm = _nfc(text)
    if not norm:
        raise DecodeError("empty syllable token")
    cluster: list[str] = []
    vowel: str | None = None
    pos = 0
    while pos < len(norm):
        if vowel is None:
            hit = next((c for c in _CONSONANTS if norm.startswith(c, pos)), None)
            if hit:
                cluster.append(hit)
                pos += len(hit)
                continue
            hit = next((v for v in _VOWELS if norm.startswith(v, pos)), None)
            if hit:
                vowel = hit
                pos += len(hit)
                continue
            raise DecodeError(f"unknown letter {norm[pos]!r} in token {text!r}")
        if norm.startswith(_FINALS, pos):
            pos += 1
            continue
        raise DecodeError(f"unexpected text after vowel in token {text!r}")
    return SyllableToken(norm, tuple(cluster), vowel)


def _coerce_tokens(tokens: Iterable[SyllableToken | str]) -> list[SyllableToken]:
    return [t if isinstance(t, SyllableToken) else parse_syllable(t) for t in tokens]


def katapayadi_digits(
    tokens: Sequence[SyllableToken | str], table: KatapayadiTable = DEFAULT_TABLE
) -> str:
    """Digit string in written (units-first) order, one digit per valued token."""
    digits = []
    for token in _coerce_tokens(tokens):
        if not token.bears_digit:
            continue  # syllable-final consonants carry no value
        if not token.consonant_cluster:
            if not table.standalone_vowel_is_zero:
                raise DecodeError(f"standalone vowel token {token.text!r}")
            digits.append("0")
            continue
        consonant = token.consonant_cluster[-1]
        if consonant not in table.values:
            raise DecodeError(
                f"consonant {consonant!r} in token {token.text!r} has no value"
            )
        digits.append(str(table.values[consonant]))
    if not digits:
        raise DecodeError("no digit-bearing syllables in input")
    return "".join(digits)


def decode_katapayadi(
    tokens: Sequence[SyllableToken | str], table: KatapayadiTable = DEFAULT_TABLE
) -> int:
    """Decode syllables to an integer (digit order reversed, units first)."""
    return int(katapayadi_digits(tokens, table)[::-1])


def encode_katapayadi(n: int) -> list[SyllableToken]:
    """Canonical encoding: first varga consonant per digit, units digit first.

    decode_katapayadi(encode_katapayadi(n)) == n for every n >= 0.
    """
    if n < 0:
        raise DomainError("cannot encode a negative integer")
    return [parse_syllable(_CANONICAL_SYLLABLE[int(d)]) for d in reversed(str(n))]


@dataclass(frozen=True)
class BhutasamkhyaLexicon:
    digit_words: Mapping[str, str]  # word -> decimal digit string
    magnitude_words: Mapping[str, int]  # word -> power of ten

    def classify(self, word: str) -> tuple[str, str | int]:
        norm = _nfc(word)
        if norm in self.digit_words:
            return "digits", self.digit_words[norm]
        if norm in self.magnitude_words:
            return "magnitude", self.magnitude_words[norm]
        raise DecodeError(f"unknown word {word!r}")


def load_lexicon(path: str | Path | None = None) -> BhutasamkhyaLexicon:
    """Load a word lexicon from a TSV file (default: the packaged one).

    Each line is `word<TAB>digits` or `word<TAB>E<k>` for magnitude 10**k.
    Blank lines and lines starting with '#' are skipped.
    """
    if path is None:
        text = (
            resources.files("paridhi").joinpath("data/bhutasamkhya.tsv").read_text("utf-8")
        )
    else:
        text = Path(path).read_text("utf-8")
    digit_words: dict[str, str] = {}
    magnitude_words: dict[str, int] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            word, value = line.split("\t")
        except ValueError:
            raise DecodeError(f"malformed lexicon line {lineno}: {line!r}") from None
        word = _nfc(word)
        if value.startswith("E"):
            magnitude_words[word] = int(value[1:])
        elif value.isdigit():
            digit_words[word] = value
        else:
            raise DecodeError(f"malformed lexicon value on line {lineno}: {value!r}")
    return BhutasamkhyaLexicon(digit_words, magnitude_words)


_default_lexicon: BhutasamkhyaLexicon | None = None


def default_lexicon() -> BhutasamkhyaLexicon:
    global _default_lexicon
    if _default_lexicon is None:
        _default_lexicon = load_lexicon()
    return _default_lexicon


def decode_bhutasamkhya(
    words: Sequence[str], lexicon: BhutasamkhyaLexicon | None = None
) -> int:
    """Decode a word-numeral phrase to an integer.

    A plain digit-word sequence is read units-first: the word order is
    reversed and the digit groups concatenated.  A two-word
    [digit-word, magnitude-word] phrase decodes multiplicatively.
    Magnitude words anywhere else are an error.
    """
    if not words:
        raise DecodeError("empty word list")
    lex = lexicon if lexicon is not None else default_lexicon()
    classified = [lex.classify(w) for w in words]
    if len(classified) == 2 and classified[1][0] == "magnitude":
        kind, digits = classified[0]
        if kind != "digits":
            raise DecodeError(f"magnitude word {words[0]!r} cannot carry digits")
        return int(digits) * 10 ** classified[1][1]
    parts = []
    for word, (kind, value) in zip(words, classified):
        if kind != "digits":
            raise DecodeError(
                f"magnitude word {word!r} mixed into a digit sequence"
            )
        parts.append(value)
    return int("".join(reversed(parts)))
