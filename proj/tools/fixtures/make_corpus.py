#!/usr/bin/env python3
"""Generate the synthetic Nigerian Pidgin fixture corpus (data/corpus.txt).

The sentences are produced from a small template grammar with a fixed seed so
the file is reproducible. They are not real corpus data; they exist to give
the augmentation pipeline a desk-scale input whose vocabulary is covered by
the shipped pronunciation lexicon.

    python3 tools/fixtures/make_corpus.py > data/corpus.txt
"""

import random
import sys

FIXED = [
    "E come later dey serve as pioneer .",
    "We come later learn for our new place sey if we want preach , e better to go area wey get another priest .",
    "Wetin we fit do so that our character go dey better ?",
]

SUBJECTS = [
    "I", "We", "Dem", "Una", "E", "My papa", "My mama", "Di pikin", "Di woman",
    "Our people", "Di oga", "My brother", "Di teacher", "Everybody", "Di pastor",
    "Di children", "My sister", "Di man", "Di family", "Di people for village",
    "Di brothers", "Di sisters", "Di elders", "My friend", "Di small boy",
]

AUX = ["dey", "go", "don", "fit", "wan", "no", "come", "must", "go fit", "never",
       "no fit", "still dey", "later", "sabi", "don dey", "dey try"]

VERBS = [
    "come", "teach", "preach", "learn", "know", "want", "carry", "call",
    "destroy", "reach", "see", "chop", "buy", "talk", "think", "believe",
    "help", "work", "pray", "sing", "write", "read", "bring", "take", "find",
    "give", "leave", "tell", "hear", "understand", "follow", "travel", "build",
    "clean", "cook", "sell", "share", "remember", "forget", "trust", "serve",
    "answer", "visit", "support", "change", "enjoy", "show", "keep", "open",
    "close", "send", "study", "thank", "praise", "worship", "explain",
]

OBJECTS = [
    "di thing", "anything", "everything", "di people", "di book", "di work",
    "dat matter", "di truth", "di house", "di market", "dis trouble",
    "another place", "di night", "di children", "di money", "di food",
    "di church", "di school", "di story", "di message", "di Bible",
    "di brothers", "di family", "di village", "di city", "di road", "di car",
    "di phone", "di letter", "water", "di message of di kingdom", "di prophet",
    "di meeting", "di government", "di word of God", "di song", "di language",
    "di question", "di answer", "di problem", "di job", "di land", "di farm",
    "di baby", "di light", "di world", "di law", "di plan", "di gift",
    "something", "nothing", "di different places", "di teaching", "di water",
    "di feeling", "di picture", "di paper", "di report", "di weather",
]

ADVERBIALS = [
    "later", "today", "tomorrow", "every day", "for night", "for morning",
    "together", "again", "small small", "well well", "quick quick",
    "for di area", "for our new place", "with joy", "since last year",
    "for di first time", "this week", "every Sunday", "before di night reach",
    "for di whole year", "after di meeting", "before di rain come", "sharp sharp",
    "for di next day", "as e suppose be", "with all our heart",
]

CLAUSES = [
    "because e good", "because dem no know", "because of di trouble",
    "but e no easy", "when di time reach", "whether e rain or not",
    "so that we go learn", "sey na true", "if God permit", "because na di truth",
    "but dem still dey try", "when we come back", "so that una go happy",
    "because di road bad", "whether dem like am or not", "as we don talk am",
    "because di people need am", "when di night come", "because e better pass",
]

QUESTIONS = [
    "Wetin {s_l} {a} {v} ?",
    "Why {s_l} no {v} {o} ?",
    "How {s_l} go {v} {o} ?",
    "Na who go {v} {o} ?",
    "Wetin we fit do so that {o} go dey better ?",
    "Una don {v} {o} ?",
    "Where {s_l} {a} {v} {o} ?",
]

STATEMENTS = [
    "{s} {a} {v} {o} .",
    "{s} {a} {v} {o} {adv} .",
    "{s} {a} {v} {o} , {c} .",
    "{s} {a} {v} {o} {adv} , {c} .",
    "{adv_c} , {s_l} {a} {v} {o} .",
    "{s} come {v} {o} {adv} .",
    "{s} sey {s2_l} {a} {v} {o} .",
    "{s} no {v} {o} , na {o2} {s_l} {v} .",
    "E better to {v} {o} {adv} .",
    "{s} {a} {v} {o} and {v2} {o2} .",
    "{c_c} , {s_l} {a} {v} {o} .",
    "Make {s_l} {v} {o} {adv} .",
]


def lower_first(s):
    if s == "I":
        return s
    return s[0].lower() + s[1:]


def upper_first(s):
    return s[0].upper() + s[1:]


def sentence(rng):
    if rng.random() < 0.18:
        template = rng.choice(QUESTIONS)
    else:
        template = rng.choice(STATEMENTS)
    s = rng.choice(SUBJECTS)
    s2 = rng.choice(SUBJECTS)
    fill = {
        "s": s,
        "s_l": lower_first(s),
        "s2_l": lower_first(s2),
        "a": rng.choice(AUX),
        "v": rng.choice(VERBS),
        "v2": rng.choice(VERBS),
        "o": rng.choice(OBJECTS),
        "o2": rng.choice(OBJECTS),
        "adv": rng.choice(ADVERBIALS),
        "adv_c": upper_first(rng.choice(ADVERBIALS)),
        "c": rng.choice(CLAUSES),
        "c_c": upper_first(rng.choice(CLAUSES)),
    }
    return upper_first(template.format(**fill))


def main():
    rng = random.Random(20240521)
    seen = set(FIXED)
    out = list(FIXED)
    while len(out) < 500:
        line = sentence(rng)
        if line not in seen:
            seen.add(line)
            out.append(line)
    sys.stdout.write("\n".join(out) + "\n")


if __name__ == "__main__":
    main()
