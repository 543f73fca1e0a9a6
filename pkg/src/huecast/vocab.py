"""Word-level vocabulary and fixed-length integer encoding.

Descriptions are lowercased and split on anything that is not a letter
or digit. Ids 0 and 1 are reserved for padding and out-of-vocabulary
tokens; corpus tokens get contiguous ids from 2 in order of first
appearance in the training split.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from .color import Rgb
from .dataset import ColorSample

PAD_ID = 0
UNK_ID = 1

_TOKEN_SPLIT = re.compile(r"[^a-z0-9]+")


def tokenize(text: str) -> List[str]:
    """Lowercase word tokens, split on whitespace and punctuation."""
    return [t for t in _TOKEN_SPLIT.split(text.lower()) if t]


@dataclass(frozen=True)
class Vocabulary:
    token_to_id: Dict[str, int]
    max_len: int
    id_to_token: Dict[int, str] = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(
            self, "id_to_token", {i: t for t, i in self.token_to_id.items()}
        )

    def __len__(self) -> int:
        return len(self.token_to_id)

    @property
    def size_with_reserved(self) -> int:
        # pad and unk included
        return len(self.token_to_id) + 2

    def encode(self, description: str) -> List[int]:
        """Fixed-length id vector: truncate to max_len, right-pad with 0."""
        tokens = tokenize(description)
        if not tokens:
            raise ValueError("empty description")
        ids = [self.token_to_id.get(t, UNK_ID) for t in tokens[: self.max_len]]
        ids.extend([PAD_ID] * (self.max_len - len(ids)))
        return ids

    def to_json_dict(self) -> dict:
        # tokens listed in id order; id of tokens[i] is i + 2
        ordered = sorted(self.token_to_id, key=self.token_to_id.get)
        return {"tokens": ordered, "max_len": self.max_len}

    @classmethod
    def from_json_dict(cls, d: dict) -> "Vocabulary":
        tokens = d["tokens"]
        return cls(
            token_to_id={t: i + 2 for i, t in enumerate(tokens)},
            max_len=int(d["max_len"]),
        )


def fit_vocabulary(train: Sequence[ColorSample], max_len: int = 6) -> Vocabulary:
    """Build the vocabulary from training descriptions only."""
    if not train:
        raise ValueError("empty training set")
    if max_len < 1:
        raise ValueError(f"max_len must be >= 1, got {max_len}")
    token_to_id: Dict[str, int] = {}
    for sample in train:
        for token in tokenize(sample.description):
            if token not in token_to_id:
                token_to_id[token] = len(token_to_id) + 2
    return Vocabulary(token_to_id=token_to_id, max_len=max_len)


def encode_batch(
    vocab: Vocabulary, samples: Sequence[ColorSample]
) -> List[Tuple[List[int], Rgb]]:
    """Encode each sample's description, paired with its recipe, in order."""
    out = []
    for i, sample in enumerate(samples):
        try:
            out.append((vocab.encode(sample.description), sample.recipe))
        except ValueError as exc:
            raise ValueError(f"sample {i}: {exc}") from None
    return out
