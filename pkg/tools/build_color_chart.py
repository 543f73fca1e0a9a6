"""Assemble the bundled color chart from public color-name tables.

Pulls from matplotlib's xkcd color-name survey list and keeps a
~300-row subset with two properties that make a random 80/20 split
meaningful to learn from:

* modifier families stay together (light/dark/pale/deep/medium/bright/
  very variants of a base hue are included alongside the bare hue), and
* token coverage is closed: every word in the chart appears in at least
  MIN_TOKEN_COUNT rows, so a held-out name rarely contains a word the
  training side has never seen.

Deterministic: rerunning produces the identical file.
"""
from __future__ import annotations

import csv
from collections import Counter, defaultdict
from pathlib import Path

from matplotlib.colors import XKCD_COLORS

TARGET_ROWS = 340
MIN_TOKEN_COUNT = 3
MODIFIERS = {"light", "dark", "pale", "deep", "medium", "very", "bright"}
BLOCKED_TOKENS = {
    "shit", "poo", "poop", "puke", "vomit", "barf", "snot", "booger",
    "diarrhea", "bile", "piss", "pee", "urine", "turd",
}

# names referenced by the demo walkthroughs; kept verbatim even where
# their words are rare
EXTRA_ROWS = [
    ("very light grey", (205, 205, 192)),
    ("cocoa brown", (135, 95, 66)),
]

OUT = Path(__file__).resolve().parents[1] / "src" / "huecast" / "data" / "color_chart.csv"


def hex_to_rgb(h: str) -> tuple[int, int, int]:
    h = h.lstrip("#")
    return int(h[0:2], 16), int(h[2:4], 16), int(h[4:6], 16)


def head_of(name: str) -> str:
    """Base hue phrase left after stripping leading modifier tokens."""
    tokens = name.split()
    while len(tokens) > 1 and tokens[0] in MODIFIERS:
        tokens = tokens[1:]
    return " ".join(tokens)


def close_token_coverage(names: list[str]) -> list[str]:
    """Drop names until every remaining token appears >= MIN_TOKEN_COUNT times."""
    names = list(names)
    while True:
        counts = Counter(t for n in names for t in n.split())
        rare = {t for t, c in counts.items() if c < MIN_TOKEN_COUNT}
        if not rare:
            return names
        names = [n for n in names if not set(n.split()) & rare]


def main() -> None:
    pool = {
        name.removeprefix("xkcd:"): hex_to_rgb(value)
        for name, value in XKCD_COLORS.items()
    }
    pool = {
        name: rgb
        for name, rgb in pool.items()
        if not set(name.replace("/", " ").split()) & BLOCKED_TOKENS
        and "/" not in name and "'" not in name
    }

    covered = close_token_coverage(sorted(pool))

    families: dict[str, list[str]] = defaultdict(list)
    for name in covered:
        families[head_of(name)].append(name)
    ranked = sorted(families.items(), key=lambda kv: (-len(kv[1]), kv[0]))

    selected: list[str] = []
    for _, members in ranked:
        if len(selected) + len(members) <= TARGET_ROWS:
            selected.extend(members)
    # whole-family selection can reintroduce rare tokens; re-close
    selected = close_token_coverage(selected)

    rows = {name: pool[name] for name in selected}
    for name, rgb in EXTRA_ROWS:
        rows.setdefault(name, rgb)

    OUT.parent.mkdir(parents=True, exist_ok=True)
    with OUT.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["name", "r", "g", "b"])
        for name in sorted(rows):
            r, g, b = rows[name]
            writer.writerow([name, r, g, b])
    n_variants = sum(1 for n in rows if n != head_of(n))
    print(f"wrote {len(rows)} rows to {OUT} ({n_variants} modifier variants)")


if __name__ == "__main__":
    main()
