"""Promise-problem families over one- and two-letter alphabets.

The unary family fixes a modulus N and two residues: words a^n with
n congruent to the yes-residue are yes-instances, those hitting the
no-residue are no-instances, everything else falls outside the promise.
The binary families share the yes-language {a^i b^i} and differ in the
no-language: b-surplus exactly l, or surplus l modulo N.
"""

import enum
from dataclasses import dataclass

from .words import as_runs

DEFAULT_I_MAX = 64
DEFAULT_J_MAX = 8


class Classification(enum.Enum):
    YES = "yes"
    NO = "no"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class UnaryPromiseSpec:
    """Unary instance family: yes iff n ≡ r_yes (mod N), no iff n ≡ r_no.

    The offset form (yes-words a^{iN}, no-words a^{iN+l}) is the special
    case r_yes = 0, r_no = l.
    """

    N: int
    r_yes: int
    r_no: int

    def __post_init__(self):
        if self.N < 2:
            raise ValueError(f"modulus must be at least 2, got {self.N}")
        for name in ("r_yes", "r_no"):
            r = getattr(self, name)
            if not 0 <= r < self.N:
                raise ValueError(f"{name}={r} outside [0, {self.N})")
        if self.r_yes == self.r_no:
            raise ValueError("yes- and no-residues must differ")

    @property
    def gap(self) -> int:
        """Residue gap l = (r_no - r_yes) mod N; drives machine synthesis."""
        return (self.r_no - self.r_yes) % self.N


@dataclass(frozen=True)
class BinaryPromiseSpec:
    """Binary instance family over {a, b} with yes-words a^i b^i.

    With N unset, no-words are a^i b^{i+l}. With N set (0 < l < N),
    no-words are a^i b^{i+jN+l} for all j >= 0.
    """

    l: int
    N: int | None = None

    def __post_init__(self):
        if self.l < 1:
            raise ValueError(f"surplus must be positive, got {self.l}")
        if self.N is not None and not self.l < self.N:
            raise ValueError(f"need l < N, got l={self.l}, N={self.N}")


def classify_unary(spec: UnaryPromiseSpec, n: int) -> Classification:
    """Classify the unary word of length n. Total; depends on n mod N only."""
    if n < 0:
        raise ValueError(f"negative word length {n}")
    r = n % spec.N
    if r == spec.r_yes:
        return Classification.YES
    if r == spec.r_no:
        return Classification.NO
    return Classification.OUTSIDE


def classify_binary(spec: BinaryPromiseSpec, word) -> Classification:
    """Classify a word over {a, b}; str or run-length form accepted.

    Anything not shaped a^i b^m is outside the promise. Symbols other
    than a/b are an input error.
    """
    runs = as_runs(word, ("a", "b"))
    shapes = tuple(sym for sym, _ in runs)
    if shapes not in ((), ("a",), ("b",), ("a", "b")):
        return Classification.OUTSIDE
    counts = dict(runs)
    i, m = counts.get("a", 0), counts.get("b", 0)
    if m == i:
        return Classification.YES
    surplus = m - i - spec.l
    if spec.N is None:
        if surplus == 0:
            return Classification.NO
    elif surplus >= 0 and surplus % spec.N == 0:
        return Classification.NO
    return Classification.OUTSIDE


def enumerate_instances(spec, i_max: int = DEFAULT_I_MAX, j_max: int = DEFAULT_J_MAX):
    """List (word, label) pairs with generator indices i <= i_max, j <= j_max.

    Unary words come back as int lengths, binary words as run-length
    pairs. Sorted by word length, ties broken lexicographically; every
    word is a yes- or no-instance, never outside.
    """
    if i_max < 0 or j_max < 0:
        raise ValueError("instance bounds must be nonnegative")
    items = []
    if isinstance(spec, UnaryPromiseSpec):
        for i in range(i_max + 1):
            items.append((i * spec.N + spec.r_yes, Classification.YES))
            items.append((i * spec.N + spec.r_no, Classification.NO))
        items.sort(key=lambda pair: pair[0])
        return items

    def runs(i, m):
        return tuple(pair for pair in (("a", i), ("b", m)) if pair[1])

    for i in range(i_max + 1):
        items.append((runs(i, i), Classification.YES))
        if spec.N is None:
            items.append((runs(i, i + spec.l), Classification.NO))
        else:
            for j in range(j_max + 1):
                items.append((runs(i, i + j * spec.N + spec.l), Classification.NO))
    # a-heavy words sort lexicographically before b-heavy ones of equal length
    items.sort(key=lambda pair: (sum(c for _, c in pair[0]),
                                 dict(pair[0]).get("b", 0)))
    return items


def spec_to_dict(spec) -> dict:
    """JSON form: exact field set depends on the family tag."""
    if isinstance(spec, UnaryPromiseSpec):
        return {"family": "A", "N": spec.N, "r_yes": spec.r_yes, "r_no": spec.r_no}
    if isinstance(spec, BinaryPromiseSpec):
        if spec.N is None:
            return {"family": "B", "l": spec.l}
        return {"family": "BN", "N": spec.N, "l": spec.l}
    raise TypeError(f"not a promise spec: {spec!r}")


def spec_from_dict(data: dict):
    if not isinstance(data, dict):
        raise ValueError(f"spec object must be a JSON object, got {type(data).__name__}")
    try:
        family = data["family"]
        if family == "A":
            return UnaryPromiseSpec(data["N"], data["r_yes"], data["r_no"])
        if family == "B":
            return BinaryPromiseSpec(data["l"])
        if family == "BN":
            return BinaryPromiseSpec(data["l"], data["N"])
    except KeyError as exc:
        raise ValueError(f"spec object is missing field {exc}") from exc
    raise ValueError(f"unknown family {family!r}")
