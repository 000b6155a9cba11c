#!/usr/bin/env python3
"""Generate the bundled synthetic sample: five CoNLL-U treebanks, a manifest
and a matching WALS-style CSV.

The treebanks differ in how much morphology they carry, so the measures and
the analysis have something to rank. Output is deterministic.

    python3 tools/make_sample_data.py data/sample
"""

import argparse
import csv
import random
from pathlib import Path

FEATURES = ["22A", "26A", "27A", "28A", "29A", "30A", "33A", "34A", "37A", "38A", "49A", "51A", "57A", "59A",
            "65A", "66A", "67A", "69A", "70A", "73A", "74A", "75A", "78A", "94A", "101A", "102A", "111A", "112A"]

FEATURE_VALUES = {
    "Case": ["Nom", "Gen", "Par", "Ess", "Ine", "Ela", "Ill", "Ade"],
    "Number": ["Sing", "Plur"],
    "Person": ["1", "2", "3"],
    "Tense": ["Pres", "Past"],
    "Mood": ["Ind", "Cnd", "Imp"],
    "Gender": ["Masc", "Fem", "Neut"],
    "Aspect": ["Perf", "Imp"],
    "Definite": ["Def", "Ind"],
}

# id, language code, paradigm cells, feature keys, irregular share, lemmas, annotated
TREEBANKS = [
    ("xa_agglutinative", "xa", 48, ["Case", "Number", "Person", "Tense", "Mood"], 0.02, 900, True),
    ("xf_fusional", "xf", 16, ["Case", "Number", "Gender", "Person"], 0.15, 700, True),
    ("xi_isolating", "xi", 3, ["Number", "Aspect", "Definite"], 0.05, 600, True),
    ("xp_plain", "xp", 10, [], 0.0, 700, False),
    ("zh_synthetic", "zh", 4, ["Number", "Aspect", "Definite", "Person"], 0.08, 800, True),
]


def word(rng, lo, hi, alphabet="abcdefghijklmnoprstuvy"):
    return "".join(rng.choice(alphabet) for _ in range(rng.randint(lo, hi)))


def bundle(cell, keys):
    """Mixed-radix reading of the cell index over the keys' value lists."""
    parts = []
    for key in keys:
        values = FEATURE_VALUES[key]
        parts.append(f"{key}={values[cell % len(values)]}")
        cell //= len(values)
    return "|".join(sorted(parts))


def treebank(rng, cells, keys, irregular, n_lemmas, annotated, sentences=2500):
    stems = sorted({word(rng, 3, 7) for _ in range(n_lemmas * 2)})[:n_lemmas]
    rng.shuffle(stems)
    suffixes = [""] + sorted({word(rng, 1, 3) for _ in range(cells * 3)})[: cells - 1]
    weights = [1.0 / (r + 1) for r in range(len(stems))]
    suppletive = {}
    lines = []
    for s in range(sentences):
        n = rng.randint(4, 18)
        lines.append(f"# sent_id = {s + 1}")
        chosen = rng.choices(stems, weights=weights, k=n)
        for i, lemma in enumerate(chosen, start=1):
            c = rng.randrange(cells)
            key = (lemma, c)
            if key not in suppletive:
                suppletive[key] = word(rng, 3, 7) if c and rng.random() < irregular else None
            form = suppletive[key] or lemma + suffixes[c]
            lemma_col = lemma if annotated else "_"
            feats_col = bundle(c, keys) if annotated and keys else "_"
            head = 0 if i == 1 else 1
            rel = "root" if i == 1 else "dep"
            lines.append(f"{i}\t{form}\t{lemma_col}\tX\t_\t{feats_col}\t{head}\t{rel}\t_\t_")
        lines.append("")
    return "\n".join(lines) + "\n"


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("out", type=Path)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    manifest = ["id\tlanguage_code\tpath"]
    for k, (tb_id, lang, cells, keys, irregular, lemmas, annotated) in enumerate(TREEBANKS):
        rng = random.Random(args.seed * 1000 + k)
        text = treebank(rng, cells, keys, irregular, lemmas, annotated)
        (args.out / f"{tb_id}.conllu").write_text(text, encoding="utf-8")
        manifest.append(f"{tb_id}\t{lang}\t{tb_id}.conllu")
    (args.out / "manifest.tsv").write_text("\n".join(manifest) + "\n", encoding="utf-8")

    # WALS-style table: richer paradigms get higher category numbers, with gaps
    rng = random.Random(args.seed)
    with open(args.out / "wals.csv", "w", newline="", encoding="utf-8") as f:
        w = csv.writer(f)
        w.writerow(["language_code", "name"] + FEATURES)
        for tb_id, lang, cells, *_ in TREEBANKS:
            level = 1 + min(3, cells // 12)
            row = [lang, tb_id]
            for _ in FEATURES:
                row.append("" if rng.random() < 0.25 else f"{max(1, level - rng.randint(0, 1))} category")
            w.writerow(row)


if __name__ == "__main__":
    main()
