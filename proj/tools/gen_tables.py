#!/usr/bin/env python3
"""Regenerates the shipped code tables and phonetic conversion tables.

    python3 tools/gen_tables.py [data-dir]

Output is deterministic; the generated files are checked in.
"""
import os
import sys
import unicodedata

L1_ROWS = (1, 55)
L2_ROWS = (56, 94)


def header(out, title):
    out.write(f"# {title}\n")
    out.write("# generated by tools/gen_tables.py; do not edit by hand\n")
    out.write(f"@levels\t{L1_ROWS[0]}-{L1_ROWS[1]}\t{L2_ROWS[0]}-{L2_ROWS[1]}\n")


def gb2312_hanzi(path):
    n1 = n2 = 0
    with open(path, "w", encoding="utf-8", newline="\n") as out:
        header(out, "GB2312 hanzi, level 1 rows 16-55 and level 2 rows 56-87")
        out.write("@bank\tHan\t16-87\n")
        for row in range(16, 88):
            for cell in range(1, 95):
                raw = bytes([0xA0 + row, 0xA0 + cell])
                try:
                    ch = raw.decode("gb2312")
                except UnicodeDecodeError:
                    continue
                out.write(f"{row}\t{cell}\t{ord(ch):04X}\tHan\t{ch}\n")
                if row <= 55:
                    n1 += 1
                else:
                    n2 += 1
    return n1, n2


BLOCKS = [
    # script, block base, first row
    ("Devanagari", 0x0900, 16),
    ("Bengali", 0x0980, 56),
    ("Telugu", 0x0C00, 58),
]


def indic(path):
    with open(path, "w", encoding="utf-8", newline="\n") as out:
        header(out, "Indic reference table: Devanagari in level 1, Bengali and Telugu in level 2")
        for script, _, first in BLOCKS:
            out.write(f"@bank\t{script}\t{first}-{first + 1}\n")
        for script, base, first in BLOCKS:
            out.write(f"# {script} U+{base:04X}..U+{base + 0x7F:04X}\n")
            for k in range(0x80):
                ch = chr(base + k)
                name = unicodedata.name(ch, None)
                if name is None:
                    continue
                row, cell = first + k // 94, 1 + k % 94
                out.write(f"{row}\t{cell}\t{base + k:04X}\t{script}\t{name}\n")


# Harvard-Kyoto keys by offset within an ISCII-derived Unicode block.
VOWELS = {0x05: "a", 0x06: "A", 0x07: "i", 0x08: "I", 0x09: "u", 0x0A: "U",
          0x0B: "R", 0x0F: "e", 0x10: "ai", 0x13: "o", 0x14: "au"}
MATRAS = {0x3E: "A", 0x3F: "i", 0x40: "I", 0x41: "u", 0x42: "U", 0x43: "R",
          0x47: "e", 0x48: "ai", 0x4B: "o", 0x4C: "au"}
TELUGU_VOWELS = {0x0E: "e", 0x0F: "E", 0x12: "o", 0x13: "O"}
TELUGU_MATRAS = {0x46: "e", 0x47: "E", 0x4A: "o", 0x4B: "O"}
CONSONANTS = {0x15: "k", 0x16: "kh", 0x17: "g", 0x18: "gh", 0x19: "G",
              0x1A: "c", 0x1B: "ch", 0x1C: "j", 0x1D: "jh", 0x1E: "J",
              0x1F: "T", 0x20: "Th", 0x21: "D", 0x22: "Dh", 0x23: "N",
              0x24: "t", 0x25: "th", 0x26: "d", 0x27: "dh", 0x28: "n",
              0x2A: "p", 0x2B: "ph", 0x2C: "b", 0x2D: "bh", 0x2E: "m",
              0x2F: "y", 0x30: "r", 0x32: "l", 0x33: "L", 0x35: "v",
              0x36: "z", 0x37: "S", 0x38: "s", 0x39: "h"}
VIRAMA, ANUSVARA, VISARGA = 0x4D, 0x02, 0x03


def ime_table(path, base, words, telugu=False):
    vowels = dict(VOWELS)
    matras = dict(MATRAS)
    if telugu:
        for k in (0x0F, 0x13, 0x10, 0x14):
            vowels.pop(k, None)
        for k in (0x47, 0x4B, 0x48, 0x4C):
            matras.pop(k, None)
        vowels.update(TELUGU_VOWELS)
        vowels.update({0x10: "ai", 0x14: "au"})
        matras.update(TELUGU_MATRAS)
        matras.update({0x48: "ai", 0x4C: "au"})
    rows = []
    for off, key in vowels.items():
        rows.append((key, chr(base + off), 60))
    for coff, ckey in CONSONANTS.items():
        c = chr(base + coff)
        rows.append((ckey + "a", c, 100))
        rows.append((ckey, c + chr(base + VIRAMA), 40))
        for moff, mkey in matras.items():
            rows.append((ckey + mkey, c + chr(base + moff), 50))
    rows.append(("M", chr(base + ANUSVARA), 70))
    rows.append(("H", chr(base + VISARGA), 20))
    for key, text, freq in words:
        rows.append((key, text, freq))
    seen = set()
    with open(path, "w", encoding="utf-8", newline="\n") as out:
        out.write("# Harvard-Kyoto phonetic keys; generated by tools/gen_tables.py\n")
        out.write("# key\toutput\tfrequency\n")
        for key, text, freq in rows:
            if (key, text) in seen:
                continue
            seen.add((key, text))
            out.write(f"{key}\t{text}\t{freq}\n")


HINDI_WORDS = [("rAma", "राम", 200), ("ne", "ने", 300), ("roTI", "रोटी", 150),
               ("khAI", "खाई", 120), ("pustaka", "पुस्तक", 150),
               ("kyA", "क्या", 250), ("Apa", "आप", 220)]
TELUGU_WORDS = [("mIru", "మీరు", 200), ("pustakaM", "పుస్తకం", 150),
                ("caduvutunnArA", "చదువుతున్నారా", 120),
                ("nEnu", "నేను", 200)]


def main():
    data = sys.argv[1] if len(sys.argv) > 1 else os.path.join(
        os.path.dirname(__file__), "..", "data")
    n1, n2 = gb2312_hanzi(os.path.join(data, "tables", "gb2312_hanzi.tsv"))
    print(f"gb2312_hanzi: L1={n1} L2={n2} total={n1 + n2}")
    indic(os.path.join(data, "tables", "indic.tsv"))
    ime_table(os.path.join(data, "ime", "hi_hk.tsv"), 0x0900, HINDI_WORDS)
    ime_table(os.path.join(data, "ime", "te_hk.tsv"), 0x0C00, TELUGU_WORDS,
              telugu=True)


if __name__ == "__main__":
    main()
