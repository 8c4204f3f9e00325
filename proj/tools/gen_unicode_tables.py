#!/usr/bin/env python3
"""Regenerates include/fileclass/detail/unicode_tables.hpp.

Builds merged code-point ranges for the character kinds the text
transforms care about: cased letters (upper/lower), caseless letters,
and decimal digits. Everything absent from the table is "other".
"""

import unicodedata
from pathlib import Path

KIND_OF_CATEGORY = {
    "Lu": "Upper",
    "Lt": "Upper",
    "Ll": "Lower",
    "Lm": "CaselessLetter",
    "Lo": "CaselessLetter",
    "Nd": "Digit",
}


def build_ranges():
    ranges = []
    cur = None
    for cp in range(0x110000):
        kind = KIND_OF_CATEGORY.get(unicodedata.category(chr(cp)))
        if kind is None:
            if cur:
                ranges.append(cur)
                cur = None
            continue
        if cur and cur[2] == kind and cur[1] == cp - 1:
            cur = (cur[0], cp, kind)
        else:
            if cur:
                ranges.append(cur)
            cur = (cp, cp, kind)
    if cur:
        ranges.append(cur)
    return ranges


def main():
    out = Path(__file__).resolve().parent.parent / "include" / "fileclass" / "detail" / "unicode_tables.hpp"
    ranges = build_ranges()
    lines = []
    lines.append("// Generated by tools/gen_unicode_tables.py against Unicode "
                 f"{unicodedata.unidata_version} data. Do not edit by hand.")
    lines.append("#pragma once")
    lines.append("")
    lines.append("#include <cstddef>")
    lines.append("#include <cstdint>")
    lines.append("")
    lines.append("namespace fileclass::detail {")
    lines.append("")
    lines.append("enum class UnicodeKind : std::uint8_t {")
    lines.append("  Other = 0,")
    lines.append("  Upper,")
    lines.append("  Lower,")
    lines.append("  CaselessLetter,")
    lines.append("  Digit,")
    lines.append("};")
    lines.append("")
    lines.append("struct UnicodeRange {")
    lines.append("  char32_t first;")
    lines.append("  char32_t last;")
    lines.append("  UnicodeKind kind;")
    lines.append("};")
    lines.append("")
    lines.append("// Sorted by first code point; ranges never overlap.")
    lines.append(f"inline constexpr std::size_t kUnicodeRangeCount = {len(ranges)};")
    lines.append("inline constexpr UnicodeRange kUnicodeRanges[kUnicodeRangeCount] = {")
    for first, last, kind in ranges:
        lines.append(f"    {{0x{first:05X}, 0x{last:05X}, UnicodeKind::{kind}}},")
    lines.append("};")
    lines.append("")
    lines.append("}  // namespace fileclass::detail")
    lines.append("")
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text("\n".join(lines), encoding="utf-8")
    print(f"wrote {out} ({len(ranges)} ranges)")


if __name__ == "__main__":
    main()
