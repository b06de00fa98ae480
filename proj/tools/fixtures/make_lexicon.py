#!/usr/bin/env python3
"""Build the shipped pronunciation lexicon and English blocklist.

English pronunciations come from CMUdict (ARPAbet, converted to the IPA
symbols of data/inventory.tsv). Word selection: every word of the fixture
corpus and calibration set, the example words of the variation rules, then the
most frequent English words (wordfreq's small_en list) until the lexicon holds
about 2000 entries. Pidgin function words that CMUdict lacks are written by
hand below.

    python3 tools/fixtures/make_lexicon.py \
        --cmudict cmudict.dict --wordfreq small_en.msgpack.gz \
        --corpus data/corpus.txt --calibration data/calibration.tsv \
        --lexicon data/lexicon.tsv --blocklist data/blocklist.txt
"""

import argparse
import gzip
import re
import struct

TARGET_SIZE = 2000

VOWELS = {
    "AA": "ɑ", "AE": "æ", "AO": "ɔ", "AW": "aʊ", "AY": "aɪ", "EH": "ɛ",
    "EY": "eɪ", "IH": "ɪ", "OW": "oʊ", "OY": "ɔɪ", "UH": "ʊ",
}
STRESS_DEPENDENT = {
    # phone: (stressed, unstressed)
    "AH": ("ʌ", "ə"),
    "ER": ("ɜː", "ə"),
    "IY": ("iː", "i"),
    "UW": ("uː", "u"),
}
CONSONANTS = {
    "B": "b", "CH": "tʃ", "D": "d", "DH": "ð", "F": "f", "G": "g", "HH": "h",
    "JH": "dʒ", "K": "k", "L": "l", "M": "m", "N": "n", "NG": "ŋ", "P": "p",
    "R": "r", "S": "s", "SH": "ʃ", "T": "t", "TH": "θ", "V": "v", "W": "w",
    "Y": "j", "Z": "z", "ZH": "ʒ",
}

# Pidgin words without a usable CMUdict entry.
PIDGIN = {
    "dey": "d ɛ",
    "wey": "w ɛ",
    "sey": "s ɛ",
    "wetin": "w ɛ t ɪ n",
    "una": "u n a",
    "dem": "d ɛ m",
    "pikin": "p ɪ k ɪ n",
    "oga": "o g a",
    "sabi": "s a b i",
    "wan": "w a n",
    "na": "n a",
    "e": "ɛ",
    "di": "d i",
    "dis": "d ɪ s",
    "dat": "d a t",
    "papa": "p a p a",
    "mama": "m a m a",
}

# English words whose Pidgin reading or preferred variant differs from the
# first CMUdict pronunciation.
OVERRIDES = {
    "anything": "ɛ n ɪ θ ɪ ŋ",
    "because": "b ɪ k ɔ z",
    "different": "d ɪ f r ə n t",
    "don": "d ɔ n",
    "am": "a m",
    "cause": "k ɔ z",
}

RULE_WORDS = """carry call by destroy because see reach people the thing prophet
when teach trouble whether night different come anything later want preach
better another deep dip city cause that character brother mother something
pioneer""".split()

# Left to the fallback letter-to-sound table on purpose.
EXCLUDE = {"cos", "ting"}


def msgpack_decode(b, i=0):
    t = b[i]
    if t <= 0x7F:
        return t, i + 1
    if 0x80 <= t <= 0x8F:
        d = {}
        i += 1
        for _ in range(t & 0x0F):
            k, i = msgpack_decode(b, i)
            v, i = msgpack_decode(b, i)
            d[k] = v
        return d, i
    if 0x90 <= t <= 0x9F or t in (0xDC, 0xDD):
        if t == 0xDC:
            n, i = struct.unpack(">H", b[i + 1:i + 3])[0], i + 3
        elif t == 0xDD:
            n, i = struct.unpack(">I", b[i + 1:i + 5])[0], i + 5
        else:
            n, i = t & 0x0F, i + 1
        a = []
        for _ in range(n):
            v, i = msgpack_decode(b, i)
            a.append(v)
        return a, i
    if 0xA0 <= t <= 0xBF:
        n = t & 0x1F
        return b[i + 1:i + 1 + n].decode(), i + 1 + n
    if t == 0xD9:
        n = b[i + 1]
        return b[i + 2:i + 2 + n].decode(), i + 2 + n
    if t == 0xDA:
        n = struct.unpack(">H", b[i + 1:i + 3])[0]
        return b[i + 3:i + 3 + n].decode(), i + 3 + n
    if t == 0xC0:
        return None, i + 1
    if t == 0xCC:
        return b[i + 1], i + 2
    if t == 0xCD:
        return struct.unpack(">H", b[i + 1:i + 3])[0], i + 3
    raise ValueError("unsupported msgpack tag %#x" % t)


def frequency_list(path):
    data = msgpack_decode(gzip.open(path).read())[0]
    return [w for bucket in data[1:] for w in bucket]


def load_cmudict(path):
    entries = {}
    with open(path, encoding="utf-8") as f:
        for line in f:
            line = line.split("#")[0].strip()
            if not line:
                continue
            word, *phones = line.split()
            if "(" in word:
                continue
            entries[word] = phones
    return entries


def to_ipa(phones):
    out = []
    for p in phones:
        base, stress = re.match(r"([A-Z]+)([012]?)", p).groups()
        if base in VOWELS:
            out.append(VOWELS[base])
        elif base in STRESS_DEPENDENT:
            stressed, unstressed = STRESS_DEPENDENT[base]
            out.append(unstressed if stress == "0" else stressed)
        else:
            out.append(CONSONANTS[base])
    return " ".join(out)


def corpus_words(path):
    words = []
    with open(path, encoding="utf-8") as f:
        for line in f:
            words += re.findall(r"[A-Za-z']*[A-Za-z][A-Za-z']*", line)
    return [w.lower() for w in words]


def calibration_seeds(path):
    seeds = []
    with open(path, encoding="utf-8") as f:
        for line in f:
            if line.startswith("#") or not line.strip():
                continue
            seeds.append(line.split("\t")[0].lower())
    return seeds


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--cmudict", required=True)
    ap.add_argument("--wordfreq", required=True)
    ap.add_argument("--corpus", required=True)
    ap.add_argument("--calibration", required=True)
    ap.add_argument("--lexicon", required=True)
    ap.add_argument("--blocklist", required=True)
    args = ap.parse_args()

    cmu = load_cmudict(args.cmudict)
    wanted = []
    for w in corpus_words(args.corpus) + RULE_WORDS + calibration_seeds(args.calibration):
        if w not in wanted:
            wanted.append(w)

    lexicon = {}
    english = set()
    for w in wanted:
        if w in PIDGIN:
            lexicon[w] = PIDGIN[w]
        elif w in OVERRIDES:
            lexicon[w] = OVERRIDES[w]
            english.add(w)
        elif w in cmu:
            lexicon[w] = to_ipa(cmu[w])
            english.add(w)
        else:
            raise SystemExit("no pronunciation for required word %r" % w)

    for w in frequency_list(args.wordfreq):
        if len(lexicon) >= TARGET_SIZE:
            break
        if w in lexicon or w in EXCLUDE or not re.fullmatch(r"[a-z']+", w):
            continue
        if not re.search(r"[a-z]", w) or w not in cmu:
            continue
        lexicon[w] = OVERRIDES.get(w) or to_ipa(cmu[w])
        english.add(w)

    with open(args.lexicon, "w", encoding="utf-8") as f:
        f.write("# word<TAB>phonemes. English entries converted from CMUdict;\n")
        f.write("# Pidgin function words transcribed by hand.\n")
        for w in sorted(lexicon):
            f.write("%s\t%s\n" % (w, lexicon[w]))

    with open(args.blocklist, "w", encoding="utf-8") as f:
        f.write("# English words of the shipped lexicon. Candidates equal to one\n")
        f.write("# of these are dropped as collisions with real English words.\n")
        for w in sorted(english):
            f.write(w + "\n")


if __name__ == "__main__":
    main()
