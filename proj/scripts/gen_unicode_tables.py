#!/usr/bin/env python3
"""Regenerates src/unicode_tables.inc from the Python unicodedata module.

The toolkit performs canonical composition (NFC) on every ingested token.
Rather than depending on ICU, the three data tables the algorithm needs are
baked into a generated source fragment:

  kCanonicalDecomp   cp -> fully (recursively) expanded canonical decomposition
  kCombiningClass    cp -> canonical combining class, nonzero entries only
  kCompositionPairs  (starter, combiner) -> primary composite

Hangul syllables are decomposed/composed algorithmically at runtime and are
excluded here.  Composition pairs are kept only when round-tripping through
the reference normalizer reproduces the composite, which filters out the
composition exclusions and non-starter decompositions without needing the
raw UCD files.

Usage: python3 scripts/gen_unicode_tables.py > src/unicode_tables.inc
"""

import sys
import unicodedata

HANGUL_S_BASE = 0xAC00
HANGUL_S_COUNT = 11172


def is_hangul_syllable(cp: int) -> bool:
    return HANGUL_S_BASE <= cp < HANGUL_S_BASE + HANGUL_S_COUNT


def canonical_decomposition(cp: int):
    """One-level canonical decomposition, or None."""
    d = unicodedata.decomposition(chr(cp))
    if not d or d.startswith("<"):  # compatibility mappings are not canonical
        return None
    return [int(f, 16) for f in d.split()]


def full_decomposition(cp: int):
    """Recursively expanded canonical decomposition."""
    parts = canonical_decomposition(cp)
    if parts is None:
        return None
    out = []
    for p in parts:
        sub = full_decomposition(p)
        out.extend(sub if sub is not None else [p])
    return out


def main() -> None:
    decomp = {}
    ccc = {}
    pairs = []
    for cp in range(0x110000):
        if 0xD800 <= cp <= 0xDFFF or is_hangul_syllable(cp):
            continue
        c = unicodedata.combining(chr(cp))
        if c:
            ccc[cp] = c
        fd = full_decomposition(cp)
        if fd is not None:
            decomp[cp] = fd
        one = canonical_decomposition(cp)
        if one is not None and len(one) == 2:
            a, b = one
            # Keep the pair only if the reference normalizer recomposes it.
            if unicodedata.normalize("NFC", chr(a) + chr(b)) == chr(cp):
                pairs.append(((a << 32) | b, cp))
    pairs.sort()

    flat = []
    index = []  # (cp, offset, length)
    for cp in sorted(decomp):
        seq = decomp[cp]
        index.append((cp, len(flat), len(seq)))
        flat.extend(seq)

    w = sys.stdout.write
    w("// Generated by scripts/gen_unicode_tables.py (Unicode %s). Do not edit.\n\n"
      % unicodedata.unidata_version)

    w("struct DecompEntry { char32_t cp; uint32_t offset; uint8_t length; };\n\n")
    w("static constexpr DecompEntry kCanonicalDecomp[] = {\n")
    for cp, off, ln in index:
        w("    {0x%X, %d, %d},\n" % (cp, off, ln))
    w("};\n\n")

    w("static constexpr char32_t kDecompBuffer[] = {\n")
    for i in range(0, len(flat), 8):
        w("    " + ", ".join("0x%X" % v for v in flat[i:i + 8]) + ",\n")
    w("};\n\n")

    w("struct CccEntry { char32_t cp; uint8_t ccc; };\n\n")
    w("static constexpr CccEntry kCombiningClass[] = {\n")
    for cp in sorted(ccc):
        w("    {0x%X, %d},\n" % (cp, ccc[cp]))
    w("};\n\n")

    w("struct CompEntry { uint64_t key; char32_t composed; };\n\n")
    w("static constexpr CompEntry kCompositionPairs[] = {\n")
    for key, composed in pairs:
        w("    {0x%XULL, 0x%X},\n" % (key, composed))
    w("};\n")


if __name__ == "__main__":
    main()
