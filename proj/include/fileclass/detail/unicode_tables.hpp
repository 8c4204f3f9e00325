// Generated by tools/gen_unicode_tables.py against Unicode 13.0.0 data. Do not edit by hand.
#pragma once

#include <cstddef>
#include <cstdint>

namespace fileclass::detail {

enum class UnicodeKind : std::uint8_t {
  Other = 0,
  Upper,
  Lower,
  CaselessLetter,
  Digit,
};

struct UnicodeRange {
  char32_t first;
  char32_t last;
  UnicodeKind kind;
};

// Sorted by first code point; ranges never overlap.
inline constexpr std::size_t kUnicodeRangeCount = 1872;
inline constexpr UnicodeRange kUnicodeRanges[kUnicodeRangeCount] = {
    {0x00030, 0x00039, UnicodeKind::Digit},
    {0x00041, 0x0005A, UnicodeKind::Upper},
    {0x00061, 0x0007A, UnicodeKind::Lower},
    {0x000AA, 0x000AA, UnicodeKind::CaselessLetter},
    {0x000B5, 0x000B5, UnicodeKind::Lower},
    {0x000BA, 0x000BA, UnicodeKind::CaselessLetter},
    {0x000C0, 0x000D6, UnicodeKind::Upper},
    {0x000D8, 0x000DE, UnicodeKind::Upper},
    {0x000DF, 0x000F6, UnicodeKind::Lower},
    {0x000F8, 0x000FF, UnicodeKind::Lower},
    {0x00100, 0x00100, UnicodeKind::Upper},
    {0x00101, 0x00101, UnicodeKind::Lower},
    {0x00102, 0x00102, UnicodeKind::Upper},
    {0x00103, 0x00103, UnicodeKind::Lower},
    {0x00104, 0x00104, UnicodeKind::Upper},
    {0x00105, 0x00105, UnicodeKind::Lower},
    {0x00106, 0x00106, UnicodeKind::Upper},
    {0x00107, 0x00107, UnicodeKind::Lower},
    {0x00108, 0x00108, UnicodeKind::Upper},
    {0x00109, 0x00109, UnicodeKind::Lower},
    {0x0010A, 0x0010A, UnicodeKind::Upper},
    {0x0010B, 0x0010B, UnicodeKind::Lower},
    {0x0010C, 0x0010C, UnicodeKind::Upper},
    {0x0010D, 0x0010D, UnicodeKind::Lower},
    {0x0010E, 0x0010E, UnicodeKind::Upper},
    {0x0010F, 0x0010F, UnicodeKind::Lower},
    {0x00110, 0x00110, UnicodeKind::Upper},
    {0x00111, 0x00111, UnicodeKind::Lower},
    {0x00112, 0x00112, UnicodeKind::Upper},
    {0x00113, 0x00113, UnicodeKind::Lower},
    {0x00114, 0x00114, UnicodeKind::Upper},
    {0x00115, 0x00115, UnicodeKind::Lower},
    {0x00116, 0x00116, UnicodeKind::Upper},
    {0x00117, 0x00117, UnicodeKind::Lower},
    {0x00118, 0x00118, UnicodeKind::Upper},
    {0x00119, 0x00119, UnicodeKind::Lower},
    {0x0011A, 0x0011A, UnicodeKind::Upper},
    {0x0011B, 0x0011B, UnicodeKind::Lower},
    {0x0011C, 0x0011C, UnicodeKind::Upper},
    {0x0011D, 0x0011D, UnicodeKind::Lower},
    {0x0011E, 0x0011E, UnicodeKind::Upper},
    {0x0011F, 0x0011F, UnicodeKind::Lower},
    {0x00120, 0x00120, UnicodeKind::Upper},
    {0x00121, 0x00121, UnicodeKind::Lower},
    {0x00122, 0x00122, UnicodeKind::Upper},
    {0x00123, 0x00123, UnicodeKind::Lower},
    {0x00124, 0x00124, UnicodeKind::Upper},
    {0x00125, 0x00125, UnicodeKind::Lower},
    {0x00126, 0x00126, UnicodeKind::Upper},
    {0x00127, 0x00127, UnicodeKind::Lower},
    {0x00128, 0x00128, UnicodeKind::Upper},
    {0x00129, 0x00129, UnicodeKind::Lower},
    {0x0012A, 0x0012A, UnicodeKind::Upper},
    {0x0012B, 0x0012B, UnicodeKind::Lower},
    {0x0012C, 0x0012C, UnicodeKind::Upper},
    {0x0012D, 0x0012D, UnicodeKind::Lower},
    {0x0012E, 0x0012E, UnicodeKind::Upper},
    {0x0012F, 0x0012F, UnicodeKind::Lower},
    {0x00130, 0x00130, UnicodeKind::Upper},
    {0x00131, 0x00131, UnicodeKind::Lower},
    {0x00132, 0x00132, UnicodeKind::Upper},
    {0x00133, 0x00133, UnicodeKind::Lower},
    {0x00134, 0x00134, UnicodeKind::Upper},
    {0x00135, 0x00135, UnicodeKind::Lower},
    {0x00136, 0x00136, UnicodeKind::Upper},
    {0x00137, 0x00138, UnicodeKind::Lower},
    {0x00139, 0x00139, UnicodeKind::Upper},
    {0x0013A, 0x0013A, UnicodeKind::Lower},
    {0x0013B, 0x0013B, UnicodeKind::Upper},
    {0x0013C, 0x0013C, UnicodeKind::Lower},
    {0x0013D, 0x0013D, UnicodeKind::Upper},
    {0x0013E, 0x0013E, UnicodeKind::Lower},
    {0x0013F, 0x0013F, UnicodeKind::Upper},
    {0x00140, 0x00140, UnicodeKind::Lower},
    {0x00141, 0x00141, UnicodeKind::Upper},
    {0x00142, 0x00142, UnicodeKind::Lower},
    {0x00143, 0x00143, UnicodeKind::Upper},
    {0x00144, 0x00144, UnicodeKind::Lower},
    {0x00145, 0x00145, UnicodeKind::Upper},
    {0x00146, 0x00146, UnicodeKind::Lower},
    {0x00147, 0x00147, UnicodeKind::Upper},
    {0x00148, 0x00149, UnicodeKind::Lower},
    {0x0014A, 0x0014A, UnicodeKind::Upper},
    {0x0014B, 0x0014B, UnicodeKind::Lower},
    {0x0014C, 0x0014C, UnicodeKind::Upper},
    {0x0014D, 0x0014D, UnicodeKind::Lower},
    {0x0014E, 0x0014E, UnicodeKind::Upper},
    {0x0014F, 0x0014F, UnicodeKind::Lower},
    {0x00150, 0x00150, UnicodeKind::Upper},
    {0x00151, 0x00151, UnicodeKind::Lower},
    {0x00152, 0x00152, UnicodeKind::Upper},
    {0x00153, 0x00153, UnicodeKind::Lower},
    {0x00154, 0x00154, UnicodeKind::Upper},
    {0x00155, 0x00155, UnicodeKind::Lower},
    {0x00156, 0x00156, UnicodeKind::Upper},
    {0x00157, 0x00157, UnicodeKind::Lower},
    {0x00158, 0x00158, UnicodeKind::Upper},
    {0x00159, 0x00159, UnicodeKind::Lower},
    {0x0015A, 0x0015A, UnicodeKind::Upper},
    {0x0015B, 0x0015B, UnicodeKind::Lower},
    {0x0015C, 0x0015C, UnicodeKind::Upper},
    {0x0015D, 0x0015D, UnicodeKind::Lower},
    {0x0015E, 0x0015E, UnicodeKind::Upper},
    {0x0015F, 0x0015F, UnicodeKind::Lower},
    {0x00160, 0x00160, UnicodeKind::Upper},
    {0x00161, 0x00161, UnicodeKind::Lower},
    {0x00162, 0x00162, UnicodeKind::Upper},
    {0x00163, 0x00163, UnicodeKind::Lower},
    {0x00164, 0x00164, UnicodeKind::Upper},
    {0x00165, 0x00165, UnicodeKind::Lower},
    {0x00166, 0x00166, UnicodeKind::Upper},
    {0x00167, 0x00167, UnicodeKind::Lower},
    {0x00168, 0x00168, UnicodeKind::Upper},
    {0x00169, 0x00169, UnicodeKind::Lower},
    {0x0016A, 0x0016A, UnicodeKind::Upper},
    {0x0016B, 0x0016B, UnicodeKind::Lower},
    {0x0016C, 0x0016C, UnicodeKind::Upper},
    {0x0016D, 0x0016D, UnicodeKind::Lower},
    {0x0016E, 0x0016E, UnicodeKind::Upper},
    {0x0016F, 0x0016F, UnicodeKind::Lower},
    {0x00170, 0x00170, UnicodeKind::Upper},
    {0x00171, 0x00171, UnicodeKind::Lower},
    {0x00172, 0x00172, UnicodeKind::Upper},
    {0x00173, 0x00173, UnicodeKind::Lower},
    {0x00174, 0x00174, UnicodeKind::Upper},
    {0x00175, 0x00175, UnicodeKind::Lower},
    {0x00176, 0x00176, UnicodeKind::Upper},
    {0x00177, 0x00177, UnicodeKind::Lower},
    {0x00178, 0x00179, UnicodeKind::Upper},
    {0x0017A, 0x0017A, UnicodeKind::Lower},
    {0x0017B, 0x0017B, UnicodeKind::Upper},
    {0x0017C, 0x0017C, UnicodeKind::Lower},
    {0x0017D, 0x0017D, UnicodeKind::Upper},
    {0x0017E, 0x00180, UnicodeKind::Lower},
    {0x00181, 0x00182, UnicodeKind::Upper},
    {0x00183, 0x00183, UnicodeKind::Lower},
    {0x00184, 0x00184, UnicodeKind::Upper},
    {0x00185, 0x00185, UnicodeKind::Lower},
    {0x00186, 0x00187, UnicodeKind::Upper},
    {0x00188, 0x00188, UnicodeKind::Lower},
    {0x00189, 0x0018B, UnicodeKind::Upper},
    {0x0018C, 0x0018D, UnicodeKind::Lower},
    {0x0018E, 0x00191, UnicodeKind::Upper},
    {0x00192, 0x00192, UnicodeKind::Lower},
    {0x00193, 0x00194, UnicodeKind::Upper},
    {0x00195, 0x00195, UnicodeKind::Lower},
    {0x00196, 0x00198, UnicodeKind::Upper},
    {0x00199, 0x0019B, UnicodeKind::Lower},
    {0x0019C, 0x0019D, UnicodeKind::Upper},
    {0x0019E, 0x0019E, UnicodeKind::Lower},
    {0x0019F, 0x001A0, UnicodeKind::Upper},
    {0x001A1, 0x001A1, UnicodeKind::Lower},
    {0x001A2, 0x001A2, UnicodeKind::Upper},
    {0x001A3, 0x001A3, UnicodeKind::Lower},
    {0x001A4, 0x001A4, UnicodeKind::Upper},
    {0x001A5, 0x001A5, UnicodeKind::Lower},
    {0x001A6, 0x001A7, UnicodeKind::Upper},
    {0x001A8, 0x001A8, UnicodeKind::Lower},
    {0x001A9, 0x001A9, UnicodeKind::Upper},
    {0x001AA, 0x001AB, UnicodeKind::Lower},
    {0x001AC, 0x001AC, UnicodeKind::Upper},
    {0x001AD, 0x001AD, UnicodeKind::Lower},
    {0x001AE, 0x001AF, UnicodeKind::Upper},
    {0x001B0, 0x001B0, UnicodeKind::Lower},
    {0x001B1, 0x001B3, UnicodeKind::Upper},
    {0x001B4, 0x001B4, UnicodeKind::Lower},
    {0x001B5, 0x001B5, UnicodeKind::Upper},
    {0x001B6, 0x001B6, UnicodeKind::Lower},
    {0x001B7, 0x001B8, UnicodeKind::Upper},
    {0x001B9, 0x001BA, UnicodeKind::Lower},
    {0x001BB, 0x001BB, UnicodeKind::CaselessLetter},
    {0x001BC, 0x001BC, UnicodeKind::Upper},
    {0x001BD, 0x001BF, UnicodeKind::Lower},
    {0x001C0, 0x001C3, UnicodeKind::CaselessLetter},
    {0x001C4, 0x001C5, UnicodeKind::Upper},
    {0x001C6, 0x001C6, UnicodeKind::Lower},
    {0x001C7, 0x001C8, UnicodeKind::Upper},
    {0x001C9, 0x001C9, UnicodeKind::Lower},
    {0x001CA, 0x001CB, UnicodeKind::Upper},
    {0x001CC, 0x001CC, UnicodeKind::Lower},
    {0x001CD, 0x001CD, UnicodeKind::Upper},
    {0x001CE, 0x001CE, UnicodeKind::Lower},
    {0x001CF, 0x001CF, UnicodeKind::Upper},
    {0x001D0, 0x001D0, UnicodeKind::Lower},
    {0x001D1, 0x001D1, UnicodeKind::Upper},
    {0x001D2, 0x001D2, UnicodeKind::Lower},
    {0x001D3, 0x001D3, UnicodeKind::Upper},
    {0x001D4, 0x001D4, UnicodeKind::Lower},
    {0x001D5, 0x001D5, UnicodeKind::Upper},
    {0x001D6, 0x001D6, UnicodeKind::Lower},
    {0x001D7, 0x001D7, UnicodeKind::Upper},
    {0x001D8, 0x001D8, UnicodeKind::Lower},
    {0x001D9, 0x001D9, UnicodeKind::Upper},
    {0x001DA, 0x001DA, UnicodeKind::Lower},
    {0x001DB, 0x001DB, UnicodeKind::Upper},
    {0x001DC, 0x001DD, UnicodeKind::Lower},
    {0x001DE, 0x001DE, UnicodeKind::Upper},
    {0x001DF, 0x001DF, UnicodeKind::Lower},
    {0x001E0, 0x001E0, UnicodeKind::Upper},
    {0x001E1, 0x001E1, UnicodeKind::Lower},
    {0x001E2, 0x001E2, UnicodeKind::Upper},
    {0x001E3, 0x001E3, UnicodeKind::Lower},
    {0x001E4, 0x001E4, UnicodeKind::Upper},
    {0x001E5, 0x001E5, UnicodeKind::Lower},
    {0x001E6, 0x001E6, UnicodeKind::Upper},
    {0x001E7, 0x001E7, UnicodeKind::Lower},
    {0x001E8, 0x001E8, UnicodeKind::Upper},
    {0x001E9, 0x001E9, UnicodeKind::Lower},
    {0x001EA, 0x001EA, UnicodeKind::Upper},
    {0x001EB, 0x001EB, UnicodeKind::Lower},
    {0x001EC, 0x001EC, UnicodeKind::Upper},
    {0x001ED, 0x001ED, UnicodeKind::Lower},
    {0x001EE, 0x001EE, UnicodeKind::Upper},
    {0x001EF, 0x001F0, UnicodeKind::Lower},
    {0x001F1, 0x001F2, UnicodeKind::Upper},
    {0x001F3, 0x001F3, UnicodeKind::Lower},
    {0x001F4, 0x001F4, UnicodeKind::Upper},
    {0x001F5, 0x001F5, UnicodeKind::Lower},
    {0x001F6, 0x001F8, UnicodeKind::Upper},
    {0x001F9, 0x001F9, UnicodeKind::Lower},
    {0x001FA, 0x001FA, UnicodeKind::Upper},
    {0x001FB, 0x001FB, UnicodeKind::Lower},
    {0x001FC, 0x001FC, UnicodeKind::Upper},
    {0x001FD, 0x001FD, UnicodeKind::Lower},
    {0x001FE, 0x001FE, UnicodeKind::Upper},
    {0x001FF, 0x001FF, UnicodeKind::Lower},
    {0x00200, 0x00200, UnicodeKind::Upper},
    {0x00201, 0x00201, UnicodeKind::Lower},
    {0x00202, 0x00202, UnicodeKind::Upper},
    {0x00203, 0x00203, UnicodeKind::Lower},
    {0x00204, 0x00204, UnicodeKind::Upper},
    {0x00205, 0x00205, UnicodeKind::Lower},
    {0x00206, 0x00206, UnicodeKind::Upper},
    {0x00207, 0x00207, UnicodeKind::Lower},
    {0x00208, 0x00208, UnicodeKind::Upper},
    {0x00209, 0x00209, UnicodeKind::Lower},
    {0x0020A, 0x0020A, UnicodeKind::Upper},
    {0x0020B, 0x0020B, UnicodeKind::Lower},
    {0x0020C, 0x0020C, UnicodeKind::Upper},
    {0x0020D, 0x0020D, UnicodeKind::Lower},
    {0x0020E, 0x0020E, UnicodeKind::Upper},
    {0x0020F, 0x0020F, UnicodeKind::Lower},
    {0x00210, 0x00210, UnicodeKind::Upper},
    {0x00211, 0x00211, UnicodeKind::Lower},
    {0x00212, 0x00212, UnicodeKind::Upper},
    {0x00213, 0x00213, UnicodeKind::Lower},
    {0x00214, 0x00214, UnicodeKind::Upper},
    {0x00215, 0x00215, UnicodeKind::Lower},
    {0x00216, 0x00216, UnicodeKind::Upper},
    {0x00217, 0x00217, UnicodeKind::Lower},
    {0x00218, 0x00218, UnicodeKind::Upper},
    {0x00219, 0x00219, UnicodeKind::Lower},
    {0x0021A, 0x0021A, UnicodeKind::Upper},
    {0x0021B, 0x0021B, UnicodeKind::Lower},
    {0x0021C, 0x0021C, UnicodeKind::Upper},
    {0x0021D, 0x0021D, UnicodeKind::Lower},
    {0x0021E, 0x0021E, UnicodeKind::Upper},
    {0x0021F, 0x0021F, UnicodeKind::Lower},
    {0x00220, 0x00220, UnicodeKind::Upper},
    {0x00221, 0x00221, UnicodeKind::Lower},
    {0x00222, 0x00222, UnicodeKind::Upper},
    {0x00223, 0x00223, UnicodeKind::Lower},
    {0x00224, 0x00224, UnicodeKind::Upper},
    {0x00225, 0x00225, UnicodeKind::Lower},
    {0x00226, 0x00226, UnicodeKind::Upper},
    {0x00227, 0x00227, UnicodeKind::Lower},
    {0x00228, 0x00228, UnicodeKind::Upper},
    {0x00229, 0x00229, UnicodeKind::Lower},
    {0x0022A, 0x0022A, UnicodeKind::Upper},
    {0x0022B, 0x0022B, UnicodeKind::Lower},
    {0x0022C, 0x0022C, UnicodeKind::Upper},
    {0x0022D, 0x0022D, UnicodeKind::Lower},
    {0x0022E, 0x0022E, UnicodeKind::Upper},
    {0x0022F, 0x0022F, UnicodeKind::Lower},
    {0x00230, 0x00230, UnicodeKind::Upper},
    {0x00231, 0x00231, UnicodeKind::Lower},
    {0x00232, 0x00232, UnicodeKind::Upper},
    {0x00233, 0x00239, UnicodeKind::Lower},
    {0x0023A, 0x0023B, UnicodeKind::Upper},
    {0x0023C, 0x0023C, UnicodeKind::Lower},
    {0x0023D, 0x0023E, UnicodeKind::Upper},
    {0x0023F, 0x00240, UnicodeKind::Lower},
    {0x00241, 0x00241, UnicodeKind::Upper},
    {0x00242, 0x00242, UnicodeKind::Lower},
    {0x00243, 0x00246, UnicodeKind::Upper},
    {0x00247, 0x00247, UnicodeKind::Lower},
    {0x00248, 0x00248, UnicodeKind::Upper},
    {0x00249, 0x00249, UnicodeKind::Lower},
    {0x0024A, 0x0024A, UnicodeKind::Upper},
    {0x0024B, 0x0024B, UnicodeKind::Lower},
    {0x0024C, 0x0024C, UnicodeKind::Upper},
    {0x0024D, 0x0024D, UnicodeKind::Lower},
    {0x0024E, 0x0024E, UnicodeKind::Upper},
    {0x0024F, 0x00293, UnicodeKind::Lower},
    {0x00294, 0x00294, UnicodeKind::CaselessLetter},
    {0x00295, 0x002AF, UnicodeKind::Lower},
    {0x002B0, 0x002C1, UnicodeKind::CaselessLetter},
    {0x002C6, 0x002D1, UnicodeKind::CaselessLetter},
    {0x002E0, 0x002E4, UnicodeKind::CaselessLetter},
    {0x002EC, 0x002EC, UnicodeKind::CaselessLetter},
    {0x002EE, 0x002EE, UnicodeKind::CaselessLetter},
    {0x00370, 0x00370, UnicodeKind::Upper},
    {0x00371, 0x00371, UnicodeKind::Lower},
    {0x00372, 0x00372, UnicodeKind::Upper},
    {0x00373, 0x00373, UnicodeKind::Lower},
    {0x00374, 0x00374, UnicodeKind::CaselessLetter},
    {0x00376, 0x00376, UnicodeKind::Upper},
    {0x00377, 0x00377, UnicodeKind::Lower},
    {0x0037A, 0x0037A, UnicodeKind::CaselessLetter},
    {0x0037B, 0x0037D, UnicodeKind::Lower},
    {0x0037F, 0x0037F, UnicodeKind::Upper},
    {0x00386, 0x00386, UnicodeKind::Upper},
    {0x00388, 0x0038A, UnicodeKind::Upper},
    {0x0038C, 0x0038C, UnicodeKind::Upper},
    {0x0038E, 0x0038F, UnicodeKind::Upper},
    {0x00390, 0x00390, UnicodeKind::Lower},
    {0x00391, 0x003A1, UnicodeKind::Upper},
    {0x003A3, 0x003AB, UnicodeKind::Upper},
    {0x003AC, 0x003CE, UnicodeKind::Lower},
    {0x003CF, 0x003CF, UnicodeKind::Upper},
    {0x003D0, 0x003D1, UnicodeKind::Lower},
    {0x003D2, 0x003D4, UnicodeKind::Upper},
    {0x003D5, 0x003D7, UnicodeKind::Lower},
    {0x003D8, 0x003D8, UnicodeKind::Upper},
    {0x003D9, 0x003D9, UnicodeKind::Lower},
    {0x003DA, 0x003DA, UnicodeKind::Upper},
    {0x003DB, 0x003DB, UnicodeKind::Lower},
    {0x003DC, 0x003DC, UnicodeKind::Upper},
    {0x003DD, 0x003DD, UnicodeKind::Lower},
    {0x003DE, 0x003DE, UnicodeKind::Upper},
    {0x003DF, 0x003DF, UnicodeKind::Lower},
    {0x003E0, 0x003E0, UnicodeKind::Upper},
    {0x003E1, 0x003E1, UnicodeKind::Lower},
    {0x003E2, 0x003E2, UnicodeKind::Upper},
    {0x003E3, 0x003E3, UnicodeKind::Lower},
    {0x003E4, 0x003E4, UnicodeKind::Upper},
    {0x003E5, 0x003E5, UnicodeKind::Lower},
    {0x003E6, 0x003E6, UnicodeKind::Upper},
    {0x003E7, 0x003E7, UnicodeKind::Lower},
    {0x003E8, 0x003E8, UnicodeKind::Upper},
    {0x003E9, 0x003E9, UnicodeKind::Lower},
    {0x003EA, 0x003EA, UnicodeKind::Upper},
    {0x003EB, 0x003EB, UnicodeKind::Lower},
    {0x003EC, 0x003EC, UnicodeKind::Upper},
    {0x003ED, 0x003ED, UnicodeKind::Lower},
    {0x003EE, 0x003EE, UnicodeKind::Upper},
    {0x003EF, 0x003F3, UnicodeKind::Lower},
    {0x003F4, 0x003F4, UnicodeKind::Upper},
    {0x003F5, 0x003F5, UnicodeKind::Lower},
    {0x003F7, 0x003F7, UnicodeKind::Upper},
    {0x003F8, 0x003F8, UnicodeKind::Lower},
    {0x003F9, 0x003FA, UnicodeKind::Upper},
    {0x003FB, 0x003FC, UnicodeKind::Lower},
    {0x003FD, 0x0042F, UnicodeKind::Upper},
    {0x00430, 0x0045F, UnicodeKind::Lower},
    {0x00460, 0x00460, UnicodeKind::Upper},
    {0x00461, 0x00461, UnicodeKind::Lower},
    {0x00462, 0x00462, UnicodeKind::Upper},
    {0x00463, 0x00463, UnicodeKind::Lower},
    {0x00464, 0x00464, UnicodeKind::Upper},
    {0x00465, 0x00465, UnicodeKind::Lower},
    {0x00466, 0x00466, UnicodeKind::Upper},
    {0x00467, 0x00467, UnicodeKind::Lower},
    {0x00468, 0x00468, UnicodeKind::Upper},
    {0x00469, 0x00469, UnicodeKind::Lower},
    {0x0046A, 0x0046A, UnicodeKind::Upper},
    {0x0046B, 0x0046B, UnicodeKind::Lower},
    {0x0046C, 0x0046C, UnicodeKind::Upper},
    {0x0046D, 0x0046D, UnicodeKind::Lower},
    {0x0046E, 0x0046E, UnicodeKind::Upper},
    {0x0046F, 0x0046F, UnicodeKind::Lower},
    {0x00470, 0x00470, UnicodeKind::Upper},
    {0x00471, 0x00471, UnicodeKind::Lower},
    {0x00472, 0x00472, UnicodeKind::Upper},
    {0x00473, 0x00473, UnicodeKind::Lower},
    {0x00474, 0x00474, UnicodeKind::Upper},
    {0x00475, 0x00475, UnicodeKind::Lower},
    {0x00476, 0x00476, UnicodeKind::Upper},
    {0x00477, 0x00477, UnicodeKind::Lower},
    {0x00478, 0x00478, UnicodeKind::Upper},
    {0x00479, 0x00479, UnicodeKind::Lower},
    {0x0047A, 0x0047A, UnicodeKind::Upper},
    {0x0047B, 0x0047B, UnicodeKind::Lower},
    {0x0047C, 0x0047C, UnicodeKind::Upper},
    {0x0047D, 0x0047D, UnicodeKind::Lower},
    {0x0047E, 0x0047E, UnicodeKind::Upper},
    {0x0047F, 0x0047F, UnicodeKind::Lower},
    {0x00480, 0x00480, UnicodeKind::Upper},
    {0x00481, 0x00481, UnicodeKind::Lower},
    {0x0048A, 0x0048A, UnicodeKind::Upper},
    {0x0048B, 0x0048B, UnicodeKind::Lower},
    {0x0048C, 0x0048C, UnicodeKind::Upper},
    {0x0048D, 0x0048D, UnicodeKind::Lower},
    {0x0048E, 0x0048E, UnicodeKind::Upper},
    {0x0048F, 0x0048F, UnicodeKind::Lower},
    {0x00490, 0x00490, UnicodeKind::Upper},
    {0x00491, 0x00491, UnicodeKind::Lower},
    {0x00492, 0x00492, UnicodeKind::Upper},
    {0x00493, 0x00493, UnicodeKind::Lower},
    {0x00494, 0x00494, UnicodeKind::Upper},
    {0x00495, 0x00495, UnicodeKind::Lower},
    {0x00496, 0x00496, UnicodeKind::Upper},
    {0x00497, 0x00497, UnicodeKind::Lower},
    {0x00498, 0x00498, UnicodeKind::Upper},
    {0x00499, 0x00499, UnicodeKind::Lower},
    {0x0049A, 0x0049A, UnicodeKind::Upper},
    {0x0049B, 0x0049B, UnicodeKind::Lower},
    {0x0049C, 0x0049C, UnicodeKind::Upper},
    {0x0049D, 0x0049D, UnicodeKind::Lower},
    {0x0049E, 0x0049E, UnicodeKind::Upper},
    {0x0049F, 0x0049F, UnicodeKind::Lower},
    {0x004A0, 0x004A0, UnicodeKind::Upper},
    {0x004A1, 0x004A1, UnicodeKind::Lower},
    {0x004A2, 0x004A2, UnicodeKind::Upper},
    {0x004A3, 0x004A3, UnicodeKind::Lower},
    {0x004A4, 0x004A4, UnicodeKind::Upper},
    {0x004A5, 0x004A5, UnicodeKind::Lower},
    {0x004A6, 0x004A6, UnicodeKind::Upper},
    {0x004A7, 0x004A7, UnicodeKind::Lower},
    {0x004A8, 0x004A8, UnicodeKind::Upper},
    {0x004A9, 0x004A9, UnicodeKind::Lower},
    {0x004AA, 0x004AA, UnicodeKind::Upper},
    {0x004AB, 0x004AB, UnicodeKind::Lower},
    {0x004AC, 0x004AC, UnicodeKind::Upper},
    {0x004AD, 0x004AD, UnicodeKind::Lower},
    {0x004AE, 0x004AE, UnicodeKind::Upper},
    {0x004AF, 0x004AF, UnicodeKind::Lower},
    {0x004B0, 0x004B0, UnicodeKind::Upper},
    {0x004B1, 0x004B1, UnicodeKind::Lower},
    {0x004B2, 0x004B2, UnicodeKind::Upper},
    {0x004B3, 0x004B3, UnicodeKind::Lower},
    {0x004B4, 0x004B4, UnicodeKind::Upper},
    {0x004B5, 0x004B5, UnicodeKind::Lower},
    {0x004B6, 0x004B6, UnicodeKind::Upper},
    {0x004B7, 0x004B7, UnicodeKind::Lower},
    {0x004B8, 0x004B8, UnicodeKind::Upper},
    {0x004B9, 0x004B9, UnicodeKind::Lower},
    {0x004BA, 0x004BA, UnicodeKind::Upper},
    {0x004BB, 0x004BB, UnicodeKind::Lower},
    {0x004BC, 0x004BC, UnicodeKind::Upper},
    {0x004BD, 0x004BD, UnicodeKind::Lower},
    {0x004BE, 0x004BE, UnicodeKind::Upper},
    {0x004BF, 0x004BF, UnicodeKind::Lower},
    {0x004C0, 0x004C1, UnicodeKind::Upper},
    {0x004C2, 0x004C2, UnicodeKind::Lower},
    {0x004C3, 0x004C3, UnicodeKind::Upper},
    {0x004C4, 0x004C4, UnicodeKind::Lower},
    {0x004C5, 0x004C5, UnicodeKind::Upper},
    {0x004C6, 0x004C6, UnicodeKind::Lower},
    {0x004C7, 0x004C7, UnicodeKind::Upper},
    {0x004C8, 0x004C8, UnicodeKind::Lower},
    {0x004C9, 0x004C9, UnicodeKind::Upper},
    {0x004CA, 0x004CA, UnicodeKind::Lower},
    {0x004CB, 0x004CB, UnicodeKind::Upper},
    {0x004CC, 0x004CC, UnicodeKind::Lower},
    {0x004CD, 0x004CD, UnicodeKind::Upper},
    {0x004CE, 0x004CF, UnicodeKind::Lower},
    {0x004D0, 0x004D0, UnicodeKind::Upper},
    {0x004D1, 0x004D1, UnicodeKind::Lower},
    {0x004D2, 0x004D2, UnicodeKind::Upper},
    {0x004D3, 0x004D3, UnicodeKind::Lower},
    {0x004D4, 0x004D4, UnicodeKind::Upper},
    {0x004D5, 0x004D5, UnicodeKind::Lower},
    {0x004D6, 0x004D6, UnicodeKind::Upper},
    {0x004D7, 0x004D7, UnicodeKind::Lower},
    {0x004D8, 0x004D8, UnicodeKind::Upper},
    {0x004D9, 0x004D9, UnicodeKind::Lower},
    {0x004DA, 0x004DA, UnicodeKind::Upper},
    {0x004DB, 0x004DB, UnicodeKind::Lower},
    {0x004DC, 0x004DC, UnicodeKind::Upper},
    {0x004DD, 0x004DD, UnicodeKind::Lower},
    {0x004DE, 0x004DE, UnicodeKind::Upper},
    {0x004DF, 0x004DF, UnicodeKind::Lower},
    {0x004E0, 0x004E0, UnicodeKind::Upper},
    {0x004E1, 0x004E1, UnicodeKind::Lower},
    {0x004E2, 0x004E2, UnicodeKind::Upper},
    {0x004E3, 0x004E3, UnicodeKind::Lower},
    {0x004E4, 0x004E4, UnicodeKind::Upper},
    {0x004E5, 0x004E5, UnicodeKind::Lower},
    {0x004E6, 0x004E6, UnicodeKind::Upper},
    {0x004E7, 0x004E7, UnicodeKind::Lower},
    {0x004E8, 0x004E8, UnicodeKind::Upper},
    {0x004E9, 0x004E9, UnicodeKind::Lower},
    {0x004EA, 0x004EA, UnicodeKind::Upper},
    {0x004EB, 0x004EB, UnicodeKind::Lower},
    {0x004EC, 0x004EC, UnicodeKind::Upper},
    {0x004ED, 0x004ED, UnicodeKind::Lower},
    {0x004EE, 0x004EE, UnicodeKind::Upper},
    {0x004EF, 0x004EF, UnicodeKind::Lower},
    {0x004F0, 0x004F0, UnicodeKind::Upper},
    {0x004F1, 0x004F1, UnicodeKind::Lower},
    {0x004F2, 0x004F2, UnicodeKind::Upper},
    {0x004F3, 0x004F3, UnicodeKind::Lower},
    {0x004F4, 0x004F4, UnicodeKind::Upper},
    {0x004F5, 0x004F5, UnicodeKind::Lower},
    {0x004F6, 0x004F6, UnicodeKind::Upper},
    {0x004F7, 0x004F7, UnicodeKind::Lower},
    {0x004F8, 0x004F8, UnicodeKind::Upper},
    {0x004F9, 0x004F9, UnicodeKind::Lower},
    {0x004FA, 0x004FA, UnicodeKind::Upper},
    {0x004FB, 0x004FB, UnicodeKind::Lower},
    {0x004FC, 0x004FC, UnicodeKind::Upper},
    {0x004FD, 0x004FD, UnicodeKind::Lower},
    {0x004FE, 0x004FE, UnicodeKind::Upper},
    {0x004FF, 0x004FF, UnicodeKind::Lower},
    {0x00500, 0x00500, UnicodeKind::Upper},
    {0x00501, 0x00501, UnicodeKind::Lower},
    {0x00502, 0x00502, UnicodeKind::Upper},
    {0x00503, 0x00503, UnicodeKind::Lower},
    {0x00504, 0x00504, UnicodeKind::Upper},
    {0x00505, 0x00505, UnicodeKind::Lower},
    {0x00506, 0x00506, UnicodeKind::Upper},
    {0x00507, 0x00507, UnicodeKind::Lower},
    {0x00508, 0x00508, UnicodeKind::Upper},
    {0x00509, 0x00509, UnicodeKind::Lower},
    {0x0050A, 0x0050A, UnicodeKind::Upper},
    {0x0050B, 0x0050B, UnicodeKind::Lower},
    {0x0050C, 0x0050C, UnicodeKind::Upper},
    {0x0050D, 0x0050D, UnicodeKind::Lower},
    {0x0050E, 0x0050E, UnicodeKind::Upper},
    {0x0050F, 0x0050F, UnicodeKind::Lower},
    {0x00510, 0x00510, UnicodeKind::Upper},
    {0x00511, 0x00511, UnicodeKind::Lower},
    {0x00512, 0x00512, UnicodeKind::Upper},
    {0x00513, 0x00513, UnicodeKind::Lower},
    {0x00514, 0x00514, UnicodeKind::Upper},
    {0x00515, 0x00515, UnicodeKind::Lower},
    {0x00516, 0x00516, UnicodeKind::Upper},
    {0x00517, 0x00517, UnicodeKind::Lower},
    {0x00518, 0x00518, UnicodeKind::Upper},
    {0x00519, 0x00519, UnicodeKind::Lower},
    {0x0051A, 0x0051A, UnicodeKind::Upper},
    {0x0051B, 0x0051B, UnicodeKind::Lower},
    {0x0051C, 0x0051C, UnicodeKind::Upper},
    {0x0051D, 0x0051D, UnicodeKind::Lower},
    {0x0051E, 0x0051E, UnicodeKind::Upper},
    {0x0051F, 0x0051F, UnicodeKind::Lower},
    {0x00520, 0x00520, UnicodeKind::Upper},
    {0x00521, 0x00521, UnicodeKind::Lower},
    {0x00522, 0x00522, UnicodeKind::Upper},
    {0x00523, 0x00523, UnicodeKind::Lower},
    {0x00524, 0x00524, UnicodeKind::Upper},
    {0x00525, 0x00525, UnicodeKind::Lower},
    {0x00526, 0x00526, UnicodeKind::Upper},
    {0x00527, 0x00527, UnicodeKind::Lower},
    {0x00528, 0x00528, UnicodeKind::Upper},
    {0x00529, 0x00529, UnicodeKind::Lower},
    {0x0052A, 0x0052A, UnicodeKind::Upper},
    {0x0052B, 0x0052B, UnicodeKind::Lower},
    {0x0052C, 0x0052C, UnicodeKind::Upper},
    {0x0052D, 0x0052D, UnicodeKind::Lower},
    {0x0052E, 0x0052E, UnicodeKind::Upper},
    {0x0052F, 0x0052F, UnicodeKind::Lower},
    {0x00531, 0x00556, UnicodeKind::Upper},
    {0x00559, 0x00559, UnicodeKind::CaselessLetter},
    {0x00560, 0x00588, UnicodeKind::Lower},
    {0x005D0, 0x005EA, UnicodeKind::CaselessLetter},
    {0x005EF, 0x005F2, UnicodeKind::CaselessLetter},
    {0x00620, 0x0064A, UnicodeKind::CaselessLetter},
    {0x00660, 0x00669, UnicodeKind::Digit},
    {0x0066E, 0x0066F, UnicodeKind::CaselessLetter},
    {0x00671, 0x006D3, UnicodeKind::CaselessLetter},
    {0x006D5, 0x006D5, UnicodeKind::CaselessLetter},
    {0x006E5, 0x006E6, UnicodeKind::CaselessLetter},
    {0x006EE, 0x006EF, UnicodeKind::CaselessLetter},
    {0x006F0, 0x006F9, UnicodeKind::Digit},
    {0x006FA, 0x006FC, UnicodeKind::CaselessLetter},
    {0x006FF, 0x006FF, UnicodeKind::CaselessLetter},
    {0x00710, 0x00710, UnicodeKind::CaselessLetter},
    {0x00712, 0x0072F, UnicodeKind::CaselessLetter},
    {0x0074D, 0x007A5, UnicodeKind::CaselessLetter},
    {0x007B1, 0x007B1, UnicodeKind::CaselessLetter},
    {0x007C0, 0x007C9, UnicodeKind::Digit},
    {0x007CA, 0x007EA, UnicodeKind::CaselessLetter},
    {0x007F4, 0x007F5, UnicodeKind::CaselessLetter},
    {0x007FA, 0x007FA, UnicodeKind::CaselessLetter},
    {0x00800, 0x00815, UnicodeKind::CaselessLetter},
    {0x0081A, 0x0081A, UnicodeKind::CaselessLetter},
    {0x00824, 0x00824, UnicodeKind::CaselessLetter},
    {0x00828, 0x00828, UnicodeKind::CaselessLetter},
    {0x00840, 0x00858, UnicodeKind::CaselessLetter},
    {0x00860, 0x0086A, UnicodeKind::CaselessLetter},
    {0x008A0, 0x008B4, UnicodeKind::CaselessLetter},
    {0x008B6, 0x008C7, UnicodeKind::CaselessLetter},
    {0x00904, 0x00939, UnicodeKind::CaselessLetter},
    {0x0093D, 0x0093D, UnicodeKind::CaselessLetter},
    {0x00950, 0x00950, UnicodeKind::CaselessLetter},
    {0x00958, 0x00961, UnicodeKind::CaselessLetter},
    {0x00966, 0x0096F, UnicodeKind::Digit},
    {0x00971, 0x00980, UnicodeKind::CaselessLetter},
    {0x00985, 0x0098C, UnicodeKind::CaselessLetter},
    {0x0098F, 0x00990, UnicodeKind::CaselessLetter},
    {0x00993, 0x009A8, UnicodeKind::CaselessLetter},
    {0x009AA, 0x009B0, UnicodeKind::CaselessLetter},
    {0x009B2, 0x009B2, UnicodeKind::CaselessLetter},
    {0x009B6, 0x009B9, UnicodeKind::CaselessLetter},
    {0x009BD, 0x009BD, UnicodeKind::CaselessLetter},
    {0x009CE, 0x009CE, UnicodeKind::CaselessLetter},
    {0x009DC, 0x009DD, UnicodeKind::CaselessLetter},
    {0x009DF, 0x009E1, UnicodeKind::CaselessLetter},
    {0x009E6, 0x009EF, UnicodeKind::Digit},
    {0x009F0, 0x009F1, UnicodeKind::CaselessLetter},
    {0x009FC, 0x009FC, UnicodeKind::CaselessLetter},
    {0x00A05, 0x00A0A, UnicodeKind::CaselessLetter},
    {0x00A0F, 0x00A10, UnicodeKind::CaselessLetter},
    {0x00A13, 0x00A28, UnicodeKind::CaselessLetter},
    {0x00A2A, 0x00A30, UnicodeKind::CaselessLetter},
    {0x00A32, 0x00A33, UnicodeKind::CaselessLetter},
    {0x00A35, 0x00A36, UnicodeKind::CaselessLetter},
    {0x00A38, 0x00A39, UnicodeKind::CaselessLetter},
    {0x00A59, 0x00A5C, UnicodeKind::CaselessLetter},
    {0x00A5E, 0x00A5E, UnicodeKind::CaselessLetter},
    {0x00A66, 0x00A6F, UnicodeKind::Digit},
    {0x00A72, 0x00A74, UnicodeKind::CaselessLetter},
    {0x00A85, 0x00A8D, UnicodeKind::CaselessLetter},
    {0x00A8F, 0x00A91, UnicodeKind::CaselessLetter},
    {0x00A93, 0x00AA8, UnicodeKind::CaselessLetter},
    {0x00AAA, 0x00AB0, UnicodeKind::CaselessLetter},
    {0x00AB2, 0x00AB3, UnicodeKind::CaselessLetter},
    {0x00AB5, 0x00AB9, UnicodeKind::CaselessLetter},
    {0x00ABD, 0x00ABD, UnicodeKind::CaselessLetter},
    {0x00AD0, 0x00AD0, UnicodeKind::CaselessLetter},
    {0x00AE0, 0x00AE1, UnicodeKind::CaselessLetter},
    {0x00AE6, 0x00AEF, UnicodeKind::Digit},
    {0x00AF9, 0x00AF9, UnicodeKind::CaselessLetter},
    {0x00B05, 0x00B0C, UnicodeKind::CaselessLetter},
    {0x00B0F, 0x00B10, UnicodeKind::CaselessLetter},
    {0x00B13, 0x00B28, UnicodeKind::CaselessLetter},
    {0x00B2A, 0x00B30, UnicodeKind::CaselessLetter},
    {0x00B32, 0x00B33, UnicodeKind::CaselessLetter},
    {0x00B35, 0x00B39, UnicodeKind::CaselessLetter},
    {0x00B3D, 0x00B3D, UnicodeKind::CaselessLetter},
    {0x00B5C, 0x00B5D, UnicodeKind::CaselessLetter},
    {0x00B5F, 0x00B61, UnicodeKind::CaselessLetter},
    {0x00B66, 0x00B6F, UnicodeKind::Digit},
    {0x00B71, 0x00B71, UnicodeKind::CaselessLetter},
    {0x00B83, 0x00B83, UnicodeKind::CaselessLetter},
    {0x00B85, 0x00B8A, UnicodeKind::CaselessLetter},
    {0x00B8E, 0x00B90, UnicodeKind::CaselessLetter},
    {0x00B92, 0x00B95, UnicodeKind::CaselessLetter},
    {0x00B99, 0x00B9A, UnicodeKind::CaselessLetter},
    {0x00B9C, 0x00B9C, UnicodeKind::CaselessLetter},
    {0x00B9E, 0x00B9F, UnicodeKind::CaselessLetter},
    {0x00BA3, 0x00BA4, UnicodeKind::CaselessLetter},
    {0x00BA8, 0x00BAA, UnicodeKind::CaselessLetter},
    {0x00BAE, 0x00BB9, UnicodeKind::CaselessLetter},
    {0x00BD0, 0x00BD0, UnicodeKind::CaselessLetter},
    {0x00BE6, 0x00BEF, UnicodeKind::Digit},
    {0x00C05, 0x00C0C, UnicodeKind::CaselessLetter},
    {0x00C0E, 0x00C10, UnicodeKind::CaselessLetter},
    {0x00C12, 0x00C28, UnicodeKind::CaselessLetter},
    {0x00C2A, 0x00C39, UnicodeKind::CaselessLetter},
    {0x00C3D, 0x00C3D, UnicodeKind::CaselessLetter},
    {0x00C58, 0x00C5A, UnicodeKind::CaselessLetter},
    {0x00C60, 0x00C61, UnicodeKind::CaselessLetter},
    {0x00C66, 0x00C6F, UnicodeKind::Digit},
    {0x00C80, 0x00C80, UnicodeKind::CaselessLetter},
    {0x00C85, 0x00C8C, UnicodeKind::CaselessLetter},
    {0x00C8E, 0x00C90, UnicodeKind::CaselessLetter},
    {0x00C92, 0x00CA8, UnicodeKind::CaselessLetter},
    {0x00CAA, 0x00CB3, UnicodeKind::CaselessLetter},
    {0x00CB5, 0x00CB9, UnicodeKind::CaselessLetter},
    {0x00CBD, 0x00CBD, UnicodeKind::CaselessLetter},
    {0x00CDE, 0x00CDE, UnicodeKind::CaselessLetter},
    {0x00CE0, 0x00CE1, UnicodeKind::CaselessLetter},
    {0x00CE6, 0x00CEF, UnicodeKind::Digit},
    {0x00CF1, 0x00CF2, UnicodeKind::CaselessLetter},
    {0x00D04, 0x00D0C, UnicodeKind::CaselessLetter},
    {0x00D0E, 0x00D10, UnicodeKind::CaselessLetter},
    {0x00D12, 0x00D3A, UnicodeKind::CaselessLetter},
    {0x00D3D, 0x00D3D, UnicodeKind::CaselessLetter},
    {0x00D4E, 0x00D4E, UnicodeKind::CaselessLetter},
    {0x00D54, 0x00D56, UnicodeKind::CaselessLetter},
    {0x00D5F, 0x00D61, UnicodeKind::CaselessLetter},
    {0x00D66, 0x00D6F, UnicodeKind::Digit},
    {0x00D7A, 0x00D7F, UnicodeKind::CaselessLetter},
    {0x00D85, 0x00D96, UnicodeKind::CaselessLetter},
    {0x00D9A, 0x00DB1, UnicodeKind::CaselessLetter},
    {0x00DB3, 0x00DBB, UnicodeKind::CaselessLetter},
    {0x00DBD, 0x00DBD, UnicodeKind::CaselessLetter},
    {0x00DC0, 0x00DC6, UnicodeKind::CaselessLetter},
    {0x00DE6, 0x00DEF, UnicodeKind::Digit},
    {0x00E01, 0x00E30, UnicodeKind::CaselessLetter},
    {0x00E32, 0x00E33, UnicodeKind::CaselessLetter},
    {0x00E40, 0x00E46, UnicodeKind::CaselessLetter},
    {0x00E50, 0x00E59, UnicodeKind::Digit},
    {0x00E81, 0x00E82, UnicodeKind::CaselessLetter},
    {0x00E84, 0x00E84, UnicodeKind::CaselessLetter},
    {0x00E86, 0x00E8A, UnicodeKind::CaselessLetter},
    {0x00E8C, 0x00EA3, UnicodeKind::CaselessLetter},
    {0x00EA5, 0x00EA5, UnicodeKind::CaselessLetter},
    {0x00EA7, 0x00EB0, UnicodeKind::CaselessLetter},
    {0x00EB2, 0x00EB3, UnicodeKind::CaselessLetter},
    {0x00EBD, 0x00EBD, UnicodeKind::CaselessLetter},
    {0x00EC0, 0x00EC4, UnicodeKind::CaselessLetter},
    {0x00EC6, 0x00EC6, UnicodeKind::CaselessLetter},
    {0x00ED0, 0x00ED9, UnicodeKind::Digit},
    {0x00EDC, 0x00EDF, UnicodeKind::CaselessLetter},
    {0x00F00, 0x00F00, UnicodeKind::CaselessLetter},
    {0x00F20, 0x00F29, UnicodeKind::Digit},
    {0x00F40, 0x00F47, UnicodeKind::CaselessLetter},
    {0x00F49, 0x00F6C, UnicodeKind::CaselessLetter},
    {0x00F88, 0x00F8C, UnicodeKind::CaselessLetter},
    {0x01000, 0x0102A, UnicodeKind::CaselessLetter},
    {0x0103F, 0x0103F, UnicodeKind::CaselessLetter},
    {0x01040, 0x01049, UnicodeKind::Digit},
    {0x01050, 0x01055, UnicodeKind::CaselessLetter},
    {0x0105A, 0x0105D, UnicodeKind::CaselessLetter},
    {0x01061, 0x01061, UnicodeKind::CaselessLetter},
    {0x01065, 0x01066, UnicodeKind::CaselessLetter},
    {0x0106E, 0x01070, UnicodeKind::CaselessLetter},
    {0x01075, 0x01081, UnicodeKind::CaselessLetter},
    {0x0108E, 0x0108E, UnicodeKind::CaselessLetter},
    {0x01090, 0x01099, UnicodeKind::Digit},
    {0x010A0, 0x010C5, UnicodeKind::Upper},
    {0x010C7, 0x010C7, UnicodeKind::Upper},
    {0x010CD, 0x010CD, UnicodeKind::Upper},
    {0x010D0, 0x010FA, UnicodeKind::Lower},
    {0x010FC, 0x010FC, UnicodeKind::CaselessLetter},
    {0x010FD, 0x010FF, UnicodeKind::Lower},
    {0x01100, 0x01248, UnicodeKind::CaselessLetter},
    {0x0124A, 0x0124D, UnicodeKind::CaselessLetter},
    {0x01250, 0x01256, UnicodeKind::CaselessLetter},
    {0x01258, 0x01258, UnicodeKind::CaselessLetter},
    {0x0125A, 0x0125D, UnicodeKind::CaselessLetter},
    {0x01260, 0x01288, UnicodeKind::CaselessLetter},
    {0x0128A, 0x0128D, UnicodeKind::CaselessLetter},
    {0x01290, 0x012B0, UnicodeKind::CaselessLetter},
    {0x012B2, 0x012B5, UnicodeKind::CaselessLetter},
    {0x012B8, 0x012BE, UnicodeKind::CaselessLetter},
    {0x012C0, 0x012C0, UnicodeKind::CaselessLetter},
    {0x012C2, 0x012C5, UnicodeKind::CaselessLetter},
    {0x012C8, 0x012D6, UnicodeKind::CaselessLetter},
    {0x012D8, 0x01310, UnicodeKind::CaselessLetter},
    {0x01312, 0x01315, UnicodeKind::CaselessLetter},
    {0x01318, 0x0135A, UnicodeKind::CaselessLetter},
    {0x01380, 0x0138F, UnicodeKind::CaselessLetter},
    {0x013A0, 0x013F5, UnicodeKind::Upper},
    {0x013F8, 0x013FD, UnicodeKind::Lower},
    {0x01401, 0x0166C, UnicodeKind::CaselessLetter},
    {0x0166F, 0x0167F, UnicodeKind::CaselessLetter},
    {0x01681, 0x0169A, UnicodeKind::CaselessLetter},
    {0x016A0, 0x016EA, UnicodeKind::CaselessLetter},
    {0x016F1, 0x016F8, UnicodeKind::CaselessLetter},
    {0x01700, 0x0170C, UnicodeKind::CaselessLetter},
    {0x0170E, 0x01711, UnicodeKind::CaselessLetter},
    {0x01720, 0x01731, UnicodeKind::CaselessLetter},
    {0x01740, 0x01751, UnicodeKind::CaselessLetter},
    {0x01760, 0x0176C, UnicodeKind::CaselessLetter},
    {0x0176E, 0x01770, UnicodeKind::CaselessLetter},
    {0x01780, 0x017B3, UnicodeKind::CaselessLetter},
    {0x017D7, 0x017D7, UnicodeKind::CaselessLetter},
    {0x017DC, 0x017DC, UnicodeKind::CaselessLetter},
    {0x017E0, 0x017E9, UnicodeKind::Digit},
    {0x01810, 0x01819, UnicodeKind::Digit},
    {0x01820, 0x01878, UnicodeKind::CaselessLetter},
    {0x01880, 0x01884, UnicodeKind::CaselessLetter},
    {0x01887, 0x018A8, UnicodeKind::CaselessLetter},
    {0x018AA, 0x018AA, UnicodeKind::CaselessLetter},
    {0x018B0, 0x018F5, UnicodeKind::CaselessLetter},
    {0x01900, 0x0191E, UnicodeKind::CaselessLetter},
    {0x01946, 0x0194F, UnicodeKind::Digit},
    {0x01950, 0x0196D, UnicodeKind::CaselessLetter},
    {0x01970, 0x01974, UnicodeKind::CaselessLetter},
    {0x01980, 0x019AB, UnicodeKind::CaselessLetter},
    {0x019B0, 0x019C9, UnicodeKind::CaselessLetter},
    {0x019D0, 0x019D9, UnicodeKind::Digit},
    {0x01A00, 0x01A16, UnicodeKind::CaselessLetter},
    {0x01A20, 0x01A54, UnicodeKind::CaselessLetter},
    {0x01A80, 0x01A89, UnicodeKind::Digit},
    {0x01A90, 0x01A99, UnicodeKind::Digit},
    {0x01AA7, 0x01AA7, UnicodeKind::CaselessLetter},
    {0x01B05, 0x01B33, UnicodeKind::CaselessLetter},
    {0x01B45, 0x01B4B, UnicodeKind::CaselessLetter},
    {0x01B50, 0x01B59, UnicodeKind::Digit},
    {0x01B83, 0x01BA0, UnicodeKind::CaselessLetter},
    {0x01BAE, 0x01BAF, UnicodeKind::CaselessLetter},
    {0x01BB0, 0x01BB9, UnicodeKind::Digit},
    {0x01BBA, 0x01BE5, UnicodeKind::CaselessLetter},
    {0x01C00, 0x01C23, UnicodeKind::CaselessLetter},
    {0x01C40, 0x01C49, UnicodeKind::Digit},
    {0x01C4D, 0x01C4F, UnicodeKind::CaselessLetter},
    {0x01C50, 0x01C59, UnicodeKind::Digit},
    {0x01C5A, 0x01C7D, UnicodeKind::CaselessLetter},
    {0x01C80, 0x01C88, UnicodeKind::Lower},
    {0x01C90, 0x01CBA, UnicodeKind::Upper},
    {0x01CBD, 0x01CBF, UnicodeKind::Upper},
    {0x01CE9, 0x01CEC, UnicodeKind::CaselessLetter},
    {0x01CEE, 0x01CF3, UnicodeKind::CaselessLetter},
    {0x01CF5, 0x01CF6, UnicodeKind::CaselessLetter},
    {0x01CFA, 0x01CFA, UnicodeKind::CaselessLetter},
    {0x01D00, 0x01D2B, UnicodeKind::Lower},
    {0x01D2C, 0x01D6A, UnicodeKind::CaselessLetter},
    {0x01D6B, 0x01D77, UnicodeKind::Lower},
    {0x01D78, 0x01D78, UnicodeKind::CaselessLetter},
    {0x01D79, 0x01D9A, UnicodeKind::Lower},
    {0x01D9B, 0x01DBF, UnicodeKind::CaselessLetter},
    {0x01E00, 0x01E00, UnicodeKind::Upper},
    {0x01E01, 0x01E01, UnicodeKind::Lower},
    {0x01E02, 0x01E02, UnicodeKind::Upper},
    {0x01E03, 0x01E03, UnicodeKind::Lower},
    {0x01E04, 0x01E04, UnicodeKind::Upper},
    {0x01E05, 0x01E05, UnicodeKind::Lower},
    {0x01E06, 0x01E06, UnicodeKind::Upper},
    {0x01E07, 0x01E07, UnicodeKind::Lower},
    {0x01E08, 0x01E08, UnicodeKind::Upper},
    {0x01E09, 0x01E09, UnicodeKind::Lower},
    {0x01E0A, 0x01E0A, UnicodeKind::Upper},
    {0x01E0B, 0x01E0B, UnicodeKind::Lower},
    {0x01E0C, 0x01E0C, UnicodeKind::Upper},
    {0x01E0D, 0x01E0D, UnicodeKind::Lower},
    {0x01E0E, 0x01E0E, UnicodeKind::Upper},
    {0x01E0F, 0x01E0F, UnicodeKind::Lower},
    {0x01E10, 0x01E10, UnicodeKind::Upper},
    {0x01E11, 0x01E11, UnicodeKind::Lower},
    {0x01E12, 0x01E12, UnicodeKind::Upper},
    {0x01E13, 0x01E13, UnicodeKind::Lower},
    {0x01E14, 0x01E14, UnicodeKind::Upper},
    {0x01E15, 0x01E15, UnicodeKind::Lower},
    {0x01E16, 0x01E16, UnicodeKind::Upper},
    {0x01E17, 0x01E17, UnicodeKind::Lower},
    {0x01E18, 0x01E18, UnicodeKind::Upper},
    {0x01E19, 0x01E19, UnicodeKind::Lower},
    {0x01E1A, 0x01E1A, UnicodeKind::Upper},
    {0x01E1B, 0x01E1B, UnicodeKind::Lower},
    {0x01E1C, 0x01E1C, UnicodeKind::Upper},
    {0x01E1D, 0x01E1D, UnicodeKind::Lower},
    {0x01E1E, 0x01E1E, UnicodeKind::Upper},
    {0x01E1F, 0x01E1F, UnicodeKind::Lower},
    {0x01E20, 0x01E20, UnicodeKind::Upper},
    {0x01E21, 0x01E21, UnicodeKind::Lower},
    {0x01E22, 0x01E22, UnicodeKind::Upper},
    {0x01E23, 0x01E23, UnicodeKind::Lower},
    {0x01E24, 0x01E24, UnicodeKind::Upper},
    {0x01E25, 0x01E25, UnicodeKind::Lower},
    {0x01E26, 0x01E26, UnicodeKind::Upper},
    {0x01E27, 0x01E27, UnicodeKind::Lower},
    {0x01E28, 0x01E28, UnicodeKind::Upper},
    {0x01E29, 0x01E29, UnicodeKind::Lower},
    {0x01E2A, 0x01E2A, UnicodeKind::Upper},
    {0x01E2B, 0x01E2B, UnicodeKind::Lower},
    {0x01E2C, 0x01E2C, UnicodeKind::Upper},
    {0x01E2D, 0x01E2D, UnicodeKind::Lower},
    {0x01E2E, 0x01E2E, UnicodeKind::Upper},
    {0x01E2F, 0x01E2F, UnicodeKind::Lower},
    {0x01E30, 0x01E30, UnicodeKind::Upper},
    {0x01E31, 0x01E31, UnicodeKind::Lower},
    {0x01E32, 0x01E32, UnicodeKind::Upper},
    {0x01E33, 0x01E33, UnicodeKind::Lower},
    {0x01E34, 0x01E34, UnicodeKind::Upper},
    {0x01E35, 0x01E35, UnicodeKind::Lower},
    {0x01E36, 0x01E36, UnicodeKind::Upper},
    {0x01E37, 0x01E37, UnicodeKind::Lower},
    {0x01E38, 0x01E38, UnicodeKind::Upper},
    {0x01E39, 0x01E39, UnicodeKind::Lower},
    {0x01E3A, 0x01E3A, UnicodeKind::Upper},
    {0x01E3B, 0x01E3B, UnicodeKind::Lower},
    {0x01E3C, 0x01E3C, UnicodeKind::Upper},
    {0x01E3D, 0x01E3D, UnicodeKind::Lower},
    {0x01E3E, 0x01E3E, UnicodeKind::Upper},
    {0x01E3F, 0x01E3F, UnicodeKind::Lower},
    {0x01E40, 0x01E40, UnicodeKind::Upper},
    {0x01E41, 0x01E41, UnicodeKind::Lower},
    {0x01E42, 0x01E42, UnicodeKind::Upper},
    {0x01E43, 0x01E43, UnicodeKind::Lower},
    {0x01E44, 0x01E44, UnicodeKind::Upper},
    {0x01E45, 0x01E45, UnicodeKind::Lower},
    {0x01E46, 0x01E46, UnicodeKind::Upper},
    {0x01E47, 0x01E47, UnicodeKind::Lower},
    {0x01E48, 0x01E48, UnicodeKind::Upper},
    {0x01E49, 0x01E49, UnicodeKind::Lower},
    {0x01E4A, 0x01E4A, UnicodeKind::Upper},
    {0x01E4B, 0x01E4B, UnicodeKind::Lower},
    {0x01E4C, 0x01E4C, UnicodeKind::Upper},
    {0x01E4D, 0x01E4D, UnicodeKind::Lower},
    {0x01E4E, 0x01E4E, UnicodeKind::Upper},
    {0x01E4F, 0x01E4F, UnicodeKind::Lower},
    {0x01E50, 0x01E50, UnicodeKind::Upper},
    {0x01E51, 0x01E51, UnicodeKind::Lower},
    {0x01E52, 0x01E52, UnicodeKind::Upper},
    {0x01E53, 0x01E53, UnicodeKind::Lower},
    {0x01E54, 0x01E54, UnicodeKind::Upper},
    {0x01E55, 0x01E55, UnicodeKind::Lower},
    {0x01E56, 0x01E56, UnicodeKind::Upper},
    {0x01E57, 0x01E57, UnicodeKind::Lower},
    {0x01E58, 0x01E58, UnicodeKind::Upper},
    {0x01E59, 0x01E59, UnicodeKind::Lower},
    {0x01E5A, 0x01E5A, UnicodeKind::Upper},
    {0x01E5B, 0x01E5B, UnicodeKind::Lower},
    {0x01E5C, 0x01E5C, UnicodeKind::Upper},
    {0x01E5D, 0x01E5D, UnicodeKind::Lower},
    {0x01E5E, 0x01E5E, UnicodeKind::Upper},
    {0x01E5F, 0x01E5F, UnicodeKind::Lower},
    {0x01E60, 0x01E60, UnicodeKind::Upper},
    {0x01E61, 0x01E61, UnicodeKind::Lower},
    {0x01E62, 0x01E62, UnicodeKind::Upper},
    {0x01E63, 0x01E63, UnicodeKind::Lower},
    {0x01E64, 0x01E64, UnicodeKind::Upper},
    {0x01E65, 0x01E65, UnicodeKind::Lower},
    {0x01E66, 0x01E66, UnicodeKind::Upper},
    {0x01E67, 0x01E67, UnicodeKind::Lower},
    {0x01E68, 0x01E68, UnicodeKind::Upper},
    {0x01E69, 0x01E69, UnicodeKind::Lower},
    {0x01E6A, 0x01E6A, UnicodeKind::Upper},
    {0x01E6B, 0x01E6B, UnicodeKind::Lower},
    {0x01E6C, 0x01E6C, UnicodeKind::Upper},
    {0x01E6D, 0x01E6D, UnicodeKind::Lower},
    {0x01E6E, 0x01E6E, UnicodeKind::Upper},
    {0x01E6F, 0x01E6F, UnicodeKind::Lower},
    {0x01E70, 0x01E70, UnicodeKind::Upper},
    {0x01E71, 0x01E71, UnicodeKind::Lower},
    {0x01E72, 0x01E72, UnicodeKind::Upper},
    {0x01E73, 0x01E73, UnicodeKind::Lower},
    {0x01E74, 0x01E74, UnicodeKind::Upper},
    {0x01E75, 0x01E75, UnicodeKind::Lower},
    {0x01E76, 0x01E76, UnicodeKind::Upper},
    {0x01E77, 0x01E77, UnicodeKind::Lower},
    {0x01E78, 0x01E78, UnicodeKind::Upper},
    {0x01E79, 0x01E79, UnicodeKind::Lower},
    {0x01E7A, 0x01E7A, UnicodeKind::Upper},
    {0x01E7B, 0x01E7B, UnicodeKind::Lower},
    {0x01E7C, 0x01E7C, UnicodeKind::Upper},
    {0x01E7D, 0x01E7D, UnicodeKind::Lower},
    {0x01E7E, 0x01E7E, UnicodeKind::Upper},
    {0x01E7F, 0x01E7F, UnicodeKind::Lower},
    {0x01E80, 0x01E80, UnicodeKind::Upper},
    {0x01E81, 0x01E81, UnicodeKind::Lower},
    {0x01E82, 0x01E82, UnicodeKind::Upper},
    {0x01E83, 0x01E83, UnicodeKind::Lower},
    {0x01E84, 0x01E84, UnicodeKind::Upper},
    {0x01E85, 0x01E85, UnicodeKind::Lower},
    {0x01E86, 0x01E86, UnicodeKind::Upper},
    {0x01E87, 0x01E87, UnicodeKind::Lower},
    {0x01E88, 0x01E88, UnicodeKind::Upper},
    {0x01E89, 0x01E89, UnicodeKind::Lower},
    {0x01E8A, 0x01E8A, UnicodeKind::Upper},
    {0x01E8B, 0x01E8B, UnicodeKind::Lower},
    {0x01E8C, 0x01E8C, UnicodeKind::Upper},
    {0x01E8D, 0x01E8D, UnicodeKind::Lower},
    {0x01E8E, 0x01E8E, UnicodeKind::Upper},
    {0x01E8F, 0x01E8F, UnicodeKind::Lower},
    {0x01E90, 0x01E90, UnicodeKind::Upper},
    {0x01E91, 0x01E91, UnicodeKind::Lower},
    {0x01E92, 0x01E92, UnicodeKind::Upper},
    {0x01E93, 0x01E93, UnicodeKind::Lower},
    {0x01E94, 0x01E94, UnicodeKind::Upper},
    {0x01E95, 0x01E9D, UnicodeKind::Lower},
    {0x01E9E, 0x01E9E, UnicodeKind::Upper},
    {0x01E9F, 0x01E9F, UnicodeKind::Lower},
    {0x01EA0, 0x01EA0, UnicodeKind::Upper},
    {0x01EA1, 0x01EA1, UnicodeKind::Lower},
    {0x01EA2, 0x01EA2, UnicodeKind::Upper},
    {0x01EA3, 0x01EA3, UnicodeKind::Lower},
    {0x01EA4, 0x01EA4, UnicodeKind::Upper},
    {0x01EA5, 0x01EA5, UnicodeKind::Lower},
    {0x01EA6, 0x01EA6, UnicodeKind::Upper},
    {0x01EA7, 0x01EA7, UnicodeKind::Lower},
    {0x01EA8, 0x01EA8, UnicodeKind::Upper},
    {0x01EA9, 0x01EA9, UnicodeKind::Lower},
    {0x01EAA, 0x01EAA, UnicodeKind::Upper},
    {0x01EAB, 0x01EAB, UnicodeKind::Lower},
    {0x01EAC, 0x01EAC, UnicodeKind::Upper},
    {0x01EAD, 0x01EAD, UnicodeKind::Lower},
    {0x01EAE, 0x01EAE, UnicodeKind::Upper},
    {0x01EAF, 0x01EAF, UnicodeKind::Lower},
    {0x01EB0, 0x01EB0, UnicodeKind::Upper},
    {0x01EB1, 0x01EB1, UnicodeKind::Lower},
    {0x01EB2, 0x01EB2, UnicodeKind::Upper},
    {0x01EB3, 0x01EB3, UnicodeKind::Lower},
    {0x01EB4, 0x01EB4, UnicodeKind::Upper},
    {0x01EB5, 0x01EB5, UnicodeKind::Lower},
    {0x01EB6, 0x01EB6, UnicodeKind::Upper},
    {0x01EB7, 0x01EB7, UnicodeKind::Lower},
    {0x01EB8, 0x01EB8, UnicodeKind::Upper},
    {0x01EB9, 0x01EB9, UnicodeKind::Lower},
    {0x01EBA, 0x01EBA, UnicodeKind::Upper},
    {0x01EBB, 0x01EBB, UnicodeKind::Lower},
    {0x01EBC, 0x01EBC, UnicodeKind::Upper},
    {0x01EBD, 0x01EBD, UnicodeKind::Lower},
    {0x01EBE, 0x01EBE, UnicodeKind::Upper},
    {0x01EBF, 0x01EBF, UnicodeKind::Lower},
    {0x01EC0, 0x01EC0, UnicodeKind::Upper},
    {0x01EC1, 0x01EC1, UnicodeKind::Lower},
    {0x01EC2, 0x01EC2, UnicodeKind::Upper},
    {0x01EC3, 0x01EC3, UnicodeKind::Lower},
    {0x01EC4, 0x01EC4, UnicodeKind::Upper},
    {0x01EC5, 0x01EC5, UnicodeKind::Lower},
    {0x01EC6, 0x01EC6, UnicodeKind::Upper},
    {0x01EC7, 0x01EC7, UnicodeKind::Lower},
    {0x01EC8, 0x01EC8, UnicodeKind::Upper},
    {0x01EC9, 0x01EC9, UnicodeKind::Lower},
    {0x01ECA, 0x01ECA, UnicodeKind::Upper},
    {0x01ECB, 0x01ECB, UnicodeKind::Lower},
    {0x01ECC, 0x01ECC, UnicodeKind::Upper},
    {0x01ECD, 0x01ECD, UnicodeKind::Lower},
    {0x01ECE, 0x01ECE, UnicodeKind::Upper},
    {0x01ECF, 0x01ECF, UnicodeKind::Lower},
    {0x01ED0, 0x01ED0, UnicodeKind::Upper},
    {0x01ED1, 0x01ED1, UnicodeKind::Lower},
    {0x01ED2, 0x01ED2, UnicodeKind::Upper},
    {0x01ED3, 0x01ED3, UnicodeKind::Lower},
    {0x01ED4, 0x01ED4, UnicodeKind::Upper},
    {0x01ED5, 0x01ED5, UnicodeKind::Lower},
    {0x01ED6, 0x01ED6, UnicodeKind::Upper},
    {0x01ED7, 0x01ED7, UnicodeKind::Lower},
    {0x01ED8, 0x01ED8, UnicodeKind::Upper},
    {0x01ED9, 0x01ED9, UnicodeKind::Lower},
    {0x01EDA, 0x01EDA, UnicodeKind::Upper},
    {0x01EDB, 0x01EDB, UnicodeKind::Lower},
    {0x01EDC, 0x01EDC, UnicodeKind::Upper},
    {0x01EDD, 0x01EDD, UnicodeKind::Lower},
    {0x01EDE, 0x01EDE, UnicodeKind::Upper},
    {0x01EDF, 0x01EDF, UnicodeKind::Lower},
    {0x01EE0, 0x01EE0, UnicodeKind::Upper},
    {0x01EE1, 0x01EE1, UnicodeKind::Lower},
    {0x01EE2, 0x01EE2, UnicodeKind::Upper},
    {0x01EE3, 0x01EE3, UnicodeKind::Lower},
    {0x01EE4, 0x01EE4, UnicodeKind::Upper},
    {0x01EE5, 0x01EE5, UnicodeKind::Lower},
    {0x01EE6, 0x01EE6, UnicodeKind::Upper},
    {0x01EE7, 0x01EE7, UnicodeKind::Lower},
    {0x01EE8, 0x01EE8, UnicodeKind::Upper},
    {0x01EE9, 0x01EE9, UnicodeKind::Lower},
    {0x01EEA, 0x01EEA, UnicodeKind::Upper},
    {0x01EEB, 0x01EEB, UnicodeKind::Lower},
    {0x01EEC, 0x01EEC, UnicodeKind::Upper},
    {0x01EED, 0x01EED, UnicodeKind::Lower},
    {0x01EEE, 0x01EEE, UnicodeKind::Upper},
    {0x01EEF, 0x01EEF, UnicodeKind::Lower},
    {0x01EF0, 0x01EF0, UnicodeKind::Upper},
    {0x01EF1, 0x01EF1, UnicodeKind::Lower},
    {0x01EF2, 0x01EF2, UnicodeKind::Upper},
    {0x01EF3, 0x01EF3, UnicodeKind::Lower},
    {0x01EF4, 0x01EF4, UnicodeKind::Upper},
    {0x01EF5, 0x01EF5, UnicodeKind::Lower},
    {0x01EF6, 0x01EF6, UnicodeKind::Upper},
    {0x01EF7, 0x01EF7, UnicodeKind::Lower},
    {0x01EF8, 0x01EF8, UnicodeKind::Upper},
    {0x01EF9, 0x01EF9, UnicodeKind::Lower},
    {0x01EFA, 0x01EFA, UnicodeKind::Upper},
    {0x01EFB, 0x01EFB, UnicodeKind::Lower},
    {0x01EFC, 0x01EFC, UnicodeKind::Upper},
    {0x01EFD, 0x01EFD, UnicodeKind::Lower},
    {0x01EFE, 0x01EFE, UnicodeKind::Upper},
    {0x01EFF, 0x01F07, UnicodeKind::Lower},
    {0x01F08, 0x01F0F, UnicodeKind::Upper},
    {0x01F10, 0x01F15, UnicodeKind::Lower},
    {0x01F18, 0x01F1D, UnicodeKind::Upper},
    {0x01F20, 0x01F27, UnicodeKind::Lower},
    {0x01F28, 0x01F2F, UnicodeKind::Upper},
    {0x01F30, 0x01F37, UnicodeKind::Lower},
    {0x01F38, 0x01F3F, UnicodeKind::Upper},
    {0x01F40, 0x01F45, UnicodeKind::Lower},
    {0x01F48, 0x01F4D, UnicodeKind::Upper},
    {0x01F50, 0x01F57, UnicodeKind::Lower},
    {0x01F59, 0x01F59, UnicodeKind::Upper},
    {0x01F5B, 0x01F5B, UnicodeKind::Upper},
    {0x01F5D, 0x01F5D, UnicodeKind::Upper},
    {0x01F5F, 0x01F5F, UnicodeKind::Upper},
    {0x01F60, 0x01F67, UnicodeKind::Lower},
    {0x01F68, 0x01F6F, UnicodeKind::Upper},
    {0x01F70, 0x01F7D, UnicodeKind::Lower},
    {0x01F80, 0x01F87, UnicodeKind::Lower},
    {0x01F88, 0x01F8F, UnicodeKind::Upper},
    {0x01F90, 0x01F97, UnicodeKind::Lower},
    {0x01F98, 0x01F9F, UnicodeKind::Upper},
    {0x01FA0, 0x01FA7, UnicodeKind::Lower},
    {0x01FA8, 0x01FAF, UnicodeKind::Upper},
    {0x01FB0, 0x01FB4, UnicodeKind::Lower},
    {0x01FB6, 0x01FB7, UnicodeKind::Lower},
    {0x01FB8, 0x01FBC, UnicodeKind::Upper},
    {0x01FBE, 0x01FBE, UnicodeKind::Lower},
    {0x01FC2, 0x01FC4, UnicodeKind::Lower},
    {0x01FC6, 0x01FC7, UnicodeKind::Lower},
    {0x01FC8, 0x01FCC, UnicodeKind::Upper},
    {0x01FD0, 0x01FD3, UnicodeKind::Lower},
    {0x01FD6, 0x01FD7, UnicodeKind::Lower},
    {0x01FD8, 0x01FDB, UnicodeKind::Upper},
    {0x01FE0, 0x01FE7, UnicodeKind::Lower},
    {0x01FE8, 0x01FEC, UnicodeKind::Upper},
    {0x01FF2, 0x01FF4, UnicodeKind::Lower},
    {0x01FF6, 0x01FF7, UnicodeKind::Lower},
    {0x01FF8, 0x01FFC, UnicodeKind::Upper},
    {0x02071, 0x02071, UnicodeKind::CaselessLetter},
    {0x0207F, 0x0207F, UnicodeKind::CaselessLetter},
    {0x02090, 0x0209C, UnicodeKind::CaselessLetter},
    {0x02102, 0x02102, UnicodeKind::Upper},
    {0x02107, 0x02107, UnicodeKind::Upper},
    {0x0210A, 0x0210A, UnicodeKind::Lower},
    {0x0210B, 0x0210D, UnicodeKind::Upper},
    {0x0210E, 0x0210F, UnicodeKind::Lower},
    {0x02110, 0x02112, UnicodeKind::Upper},
    {0x02113, 0x02113, UnicodeKind::Lower},
    {0x02115, 0x02115, UnicodeKind::Upper},
    {0x02119, 0x0211D, UnicodeKind::Upper},
    {0x02124, 0x02124, UnicodeKind::Upper},
    {0x02126, 0x02126, UnicodeKind::Upper},
    {0x02128, 0x02128, UnicodeKind::Upper},
    {0x0212A, 0x0212D, UnicodeKind::Upper},
    {0x0212F, 0x0212F, UnicodeKind::Lower},
    {0x02130, 0x02133, UnicodeKind::Upper},
    {0x02134, 0x02134, UnicodeKind::Lower},
    {0x02135, 0x02138, UnicodeKind::CaselessLetter},
    {0x02139, 0x02139, UnicodeKind::Lower},
    {0x0213C, 0x0213D, UnicodeKind::Lower},
    {0x0213E, 0x0213F, UnicodeKind::Upper},
    {0x02145, 0x02145, UnicodeKind::Upper},
    {0x02146, 0x02149, UnicodeKind::Lower},
    {0x0214E, 0x0214E, UnicodeKind::Lower},
    {0x02183, 0x02183, UnicodeKind::Upper},
    {0x02184, 0x02184, UnicodeKind::Lower},
    {0x02C00, 0x02C2E, UnicodeKind::Upper},
    {0x02C30, 0x02C5E, UnicodeKind::Lower},
    {0x02C60, 0x02C60, UnicodeKind::Upper},
    {0x02C61, 0x02C61, UnicodeKind::Lower},
    {0x02C62, 0x02C64, UnicodeKind::Upper},
    {0x02C65, 0x02C66, UnicodeKind::Lower},
    {0x02C67, 0x02C67, UnicodeKind::Upper},
    {0x02C68, 0x02C68, UnicodeKind::Lower},
    {0x02C69, 0x02C69, UnicodeKind::Upper},
    {0x02C6A, 0x02C6A, UnicodeKind::Lower},
    {0x02C6B, 0x02C6B, UnicodeKind::Upper},
    {0x02C6C, 0x02C6C, UnicodeKind::Lower},
    {0x02C6D, 0x02C70, UnicodeKind::Upper},
    {0x02C71, 0x02C71, UnicodeKind::Lower},
    {0x02C72, 0x02C72, UnicodeKind::Upper},
    {0x02C73, 0x02C74, UnicodeKind::Lower},
    {0x02C75, 0x02C75, UnicodeKind::Upper},
    {0x02C76, 0x02C7B, UnicodeKind::Lower},
    {0x02C7C, 0x02C7D, UnicodeKind::CaselessLetter},
    {0x02C7E, 0x02C80, UnicodeKind::Upper},
    {0x02C81, 0x02C81, UnicodeKind::Lower},
    {0x02C82, 0x02C82, UnicodeKind::Upper},
    {0x02C83, 0x02C83, UnicodeKind::Lower},
    {0x02C84, 0x02C84, UnicodeKind::Upper},
    {0x02C85, 0x02C85, UnicodeKind::Lower},
    {0x02C86, 0x02C86, UnicodeKind::Upper},
    {0x02C87, 0x02C87, UnicodeKind::Lower},
    {0x02C88, 0x02C88, UnicodeKind::Upper},
    {0x02C89, 0x02C89, UnicodeKind::Lower},
    {0x02C8A, 0x02C8A, UnicodeKind::Upper},
    {0x02C8B, 0x02C8B, UnicodeKind::Lower},
    {0x02C8C, 0x02C8C, UnicodeKind::Upper},
    {0x02C8D, 0x02C8D, UnicodeKind::Lower},
    {0x02C8E, 0x02C8E, UnicodeKind::Upper},
    {0x02C8F, 0x02C8F, UnicodeKind::Lower},
    {0x02C90, 0x02C90, UnicodeKind::Upper},
    {0x02C91, 0x02C91, UnicodeKind::Lower},
    {0x02C92, 0x02C92, UnicodeKind::Upper},
    {0x02C93, 0x02C93, UnicodeKind::Lower},
    {0x02C94, 0x02C94, UnicodeKind::Upper},
    {0x02C95, 0x02C95, UnicodeKind::Lower},
    {0x02C96, 0x02C96, UnicodeKind::Upper},
    {0x02C97, 0x02C97, UnicodeKind::Lower},
    {0x02C98, 0x02C98, UnicodeKind::Upper},
    {0x02C99, 0x02C99, UnicodeKind::Lower},
    {0x02C9A, 0x02C9A, UnicodeKind::Upper},
    {0x02C9B, 0x02C9B, UnicodeKind::Lower},
    {0x02C9C, 0x02C9C, UnicodeKind::Upper},
    {0x02C9D, 0x02C9D, UnicodeKind::Lower},
    {0x02C9E, 0x02C9E, UnicodeKind::Upper},
    {0x02C9F, 0x02C9F, UnicodeKind::Lower},
    {0x02CA0, 0x02CA0, UnicodeKind::Upper},
    {0x02CA1, 0x02CA1, UnicodeKind::Lower},
    {0x02CA2, 0x02CA2, UnicodeKind::Upper},
    {0x02CA3, 0x02CA3, UnicodeKind::Lower},
    {0x02CA4, 0x02CA4, UnicodeKind::Upper},
    {0x02CA5, 0x02CA5, UnicodeKind::Lower},
    {0x02CA6, 0x02CA6, UnicodeKind::Upper},
    {0x02CA7, 0x02CA7, UnicodeKind::Lower},
    {0x02CA8, 0x02CA8, UnicodeKind::Upper},
    {0x02CA9, 0x02CA9, UnicodeKind::Lower},
    {0x02CAA, 0x02CAA, UnicodeKind::Upper},
    {0x02CAB, 0x02CAB, UnicodeKind::Lower},
    {0x02CAC, 0x02CAC, UnicodeKind::Upper},
    {0x02CAD, 0x02CAD, UnicodeKind::Lower},
    {0x02CAE, 0x02CAE, UnicodeKind::Upper},
    {0x02CAF, 0x02CAF, UnicodeKind::Lower},
    {0x02CB0, 0x02CB0, UnicodeKind::Upper},
    {0x02CB1, 0x02CB1, UnicodeKind::Lower},
    {0x02CB2, 0x02CB2, UnicodeKind::Upper},
    {0x02CB3, 0x02CB3, UnicodeKind::Lower},
    {0x02CB4, 0x02CB4, UnicodeKind::Upper},
    {0x02CB5, 0x02CB5, UnicodeKind::Lower},
    {0x02CB6, 0x02CB6, UnicodeKind::Upper},
    {0x02CB7, 0x02CB7, UnicodeKind::Lower},
    {0x02CB8, 0x02CB8, UnicodeKind::Upper},
    {0x02CB9, 0x02CB9, UnicodeKind::Lower},
    {0x02CBA, 0x02CBA, UnicodeKind::Upper},
    {0x02CBB, 0x02CBB, UnicodeKind::Lower},
    {0x02CBC, 0x02CBC, UnicodeKind::Upper},
    {0x02CBD, 0x02CBD, UnicodeKind::Lower},
    {0x02CBE, 0x02CBE, UnicodeKind::Upper},
    {0x02CBF, 0x02CBF, UnicodeKind::Lower},
    {0x02CC0, 0x02CC0, UnicodeKind::Upper},
    {0x02CC1, 0x02CC1, UnicodeKind::Lower},
    {0x02CC2, 0x02CC2, UnicodeKind::Upper},
    {0x02CC3, 0x02CC3, UnicodeKind::Lower},
    {0x02CC4, 0x02CC4, UnicodeKind::Upper},
    {0x02CC5, 0x02CC5, UnicodeKind::Lower},
    {0x02CC6, 0x02CC6, UnicodeKind::Upper},
    {0x02CC7, 0x02CC7, UnicodeKind::Lower},
    {0x02CC8, 0x02CC8, UnicodeKind::Upper},
    {0x02CC9, 0x02CC9, UnicodeKind::Lower},
    {0x02CCA, 0x02CCA, UnicodeKind::Upper},
    {0x02CCB, 0x02CCB, UnicodeKind::Lower},
    {0x02CCC, 0x02CCC, UnicodeKind::Upper},
    {0x02CCD, 0x02CCD, UnicodeKind::Lower},
    {0x02CCE, 0x02CCE, UnicodeKind::Upper},
    {0x02CCF, 0x02CCF, UnicodeKind::Lower},
    {0x02CD0, 0x02CD0, UnicodeKind::Upper},
    {0x02CD1, 0x02CD1, UnicodeKind::Lower},
    {0x02CD2, 0x02CD2, UnicodeKind::Upper},
    {0x02CD3, 0x02CD3, UnicodeKind::Lower},
    {0x02CD4, 0x02CD4, UnicodeKind::Upper},
    {0x02CD5, 0x02CD5, UnicodeKind::Lower},
    {0x02CD6, 0x02CD6, UnicodeKind::Upper},
    {0x02CD7, 0x02CD7, UnicodeKind::Lower},
    {0x02CD8, 0x02CD8, UnicodeKind::Upper},
    {0x02CD9, 0x02CD9, UnicodeKind::Lower},
    {0x02CDA, 0x02CDA, UnicodeKind::Upper},
    {0x02CDB, 0x02CDB, UnicodeKind::Lower},
    {0x02CDC, 0x02CDC, UnicodeKind::Upper},
    {0x02CDD, 0x02CDD, UnicodeKind::Lower},
    {0x02CDE, 0x02CDE, UnicodeKind::Upper},
    {0x02CDF, 0x02CDF, UnicodeKind::Lower},
    {0x02CE0, 0x02CE0, UnicodeKind::Upper},
    {0x02CE1, 0x02CE1, UnicodeKind::Lower},
    {0x02CE2, 0x02CE2, UnicodeKind::Upper},
    {0x02CE3, 0x02CE4, UnicodeKind::Lower},
    {0x02CEB, 0x02CEB, UnicodeKind::Upper},
    {0x02CEC, 0x02CEC, UnicodeKind::Lower},
    {0x02CED, 0x02CED, UnicodeKind::Upper},
    {0x02CEE, 0x02CEE, UnicodeKind::Lower},
    {0x02CF2, 0x02CF2, UnicodeKind::Upper},
    {0x02CF3, 0x02CF3, UnicodeKind::Lower},
    {0x02D00, 0x02D25, UnicodeKind::Lower},
    {0x02D27, 0x02D27, UnicodeKind::Lower},
    {0x02D2D, 0x02D2D, UnicodeKind::Lower},
    {0x02D30, 0x02D67, UnicodeKind::CaselessLetter},
    {0x02D6F, 0x02D6F, UnicodeKind::CaselessLetter},
    {0x02D80, 0x02D96, UnicodeKind::CaselessLetter},
    {0x02DA0, 0x02DA6, UnicodeKind::CaselessLetter},
    {0x02DA8, 0x02DAE, UnicodeKind::CaselessLetter},
    {0x02DB0, 0x02DB6, UnicodeKind::CaselessLetter},
    {0x02DB8, 0x02DBE, UnicodeKind::CaselessLetter},
    {0x02DC0, 0x02DC6, UnicodeKind::CaselessLetter},
    {0x02DC8, 0x02DCE, UnicodeKind::CaselessLetter},
    {0x02DD0, 0x02DD6, UnicodeKind::CaselessLetter},
    {0x02DD8, 0x02DDE, UnicodeKind::CaselessLetter},
    {0x02E2F, 0x02E2F, UnicodeKind::CaselessLetter},
    {0x03005, 0x03006, UnicodeKind::CaselessLetter},
    {0x03031, 0x03035, UnicodeKind::CaselessLetter},
    {0x0303B, 0x0303C, UnicodeKind::CaselessLetter},
    {0x03041, 0x03096, UnicodeKind::CaselessLetter},
    {0x0309D, 0x0309F, UnicodeKind::CaselessLetter},
    {0x030A1, 0x030FA, UnicodeKind::CaselessLetter},
    {0x030FC, 0x030FF, UnicodeKind::CaselessLetter},
    {0x03105, 0x0312F, UnicodeKind::CaselessLetter},
    {0x03131, 0x0318E, UnicodeKind::CaselessLetter},
    {0x031A0, 0x031BF, UnicodeKind::CaselessLetter},
    {0x031F0, 0x031FF, UnicodeKind::CaselessLetter},
    {0x03400, 0x04DBF, UnicodeKind::CaselessLetter},
    {0x04E00, 0x09FFC, UnicodeKind::CaselessLetter},
    {0x0A000, 0x0A48C, UnicodeKind::CaselessLetter},
    {0x0A4D0, 0x0A4FD, UnicodeKind::CaselessLetter},
    {0x0A500, 0x0A60C, UnicodeKind::CaselessLetter},
    {0x0A610, 0x0A61F, UnicodeKind::CaselessLetter},
    {0x0A620, 0x0A629, UnicodeKind::Digit},
    {0x0A62A, 0x0A62B, UnicodeKind::CaselessLetter},
    {0x0A640, 0x0A640, UnicodeKind::Upper},
    {0x0A641, 0x0A641, UnicodeKind::Lower},
    {0x0A642, 0x0A642, UnicodeKind::Upper},
    {0x0A643, 0x0A643, UnicodeKind::Lower},
    {0x0A644, 0x0A644, UnicodeKind::Upper},
    {0x0A645, 0x0A645, UnicodeKind::Lower},
    {0x0A646, 0x0A646, UnicodeKind::Upper},
    {0x0A647, 0x0A647, UnicodeKind::Lower},
    {0x0A648, 0x0A648, UnicodeKind::Upper},
    {0x0A649, 0x0A649, UnicodeKind::Lower},
    {0x0A64A, 0x0A64A, UnicodeKind::Upper},
    {0x0A64B, 0x0A64B, UnicodeKind::Lower},
    {0x0A64C, 0x0A64C, UnicodeKind::Upper},
    {0x0A64D, 0x0A64D, UnicodeKind::Lower},
    {0x0A64E, 0x0A64E, UnicodeKind::Upper},
    {0x0A64F, 0x0A64F, UnicodeKind::Lower},
    {0x0A650, 0x0A650, UnicodeKind::Upper},
    {0x0A651, 0x0A651, UnicodeKind::Lower},
    {0x0A652, 0x0A652, UnicodeKind::Upper},
    {0x0A653, 0x0A653, UnicodeKind::Lower},
    {0x0A654, 0x0A654, UnicodeKind::Upper},
    {0x0A655, 0x0A655, UnicodeKind::Lower},
    {0x0A656, 0x0A656, UnicodeKind::Upper},
    {0x0A657, 0x0A657, UnicodeKind::Lower},
    {0x0A658, 0x0A658, UnicodeKind::Upper},
    {0x0A659, 0x0A659, UnicodeKind::Lower},
    {0x0A65A, 0x0A65A, UnicodeKind::Upper},
    {0x0A65B, 0x0A65B, UnicodeKind::Lower},
    {0x0A65C, 0x0A65C, UnicodeKind::Upper},
    {0x0A65D, 0x0A65D, UnicodeKind::Lower},
    {0x0A65E, 0x0A65E, UnicodeKind::Upper},
    {0x0A65F, 0x0A65F, UnicodeKind::Lower},
    {0x0A660, 0x0A660, UnicodeKind::Upper},
    {0x0A661, 0x0A661, UnicodeKind::Lower},
    {0x0A662, 0x0A662, UnicodeKind::Upper},
    {0x0A663, 0x0A663, UnicodeKind::Lower},
    {0x0A664, 0x0A664, UnicodeKind::Upper},
    {0x0A665, 0x0A665, UnicodeKind::Lower},
    {0x0A666, 0x0A666, UnicodeKind::Upper},
    {0x0A667, 0x0A667, UnicodeKind::Lower},
    {0x0A668, 0x0A668, UnicodeKind::Upper},
    {0x0A669, 0x0A669, UnicodeKind::Lower},
    {0x0A66A, 0x0A66A, UnicodeKind::Upper},
    {0x0A66B, 0x0A66B, UnicodeKind::Lower},
    {0x0A66C, 0x0A66C, UnicodeKind::Upper},
    {0x0A66D, 0x0A66D, UnicodeKind::Lower},
    {0x0A66E, 0x0A66E, UnicodeKind::CaselessLetter},
    {0x0A67F, 0x0A67F, UnicodeKind::CaselessLetter},
    {0x0A680, 0x0A680, UnicodeKind::Upper},
    {0x0A681, 0x0A681, UnicodeKind::Lower},
    {0x0A682, 0x0A682, UnicodeKind::Upper},
    {0x0A683, 0x0A683, UnicodeKind::Lower},
    {0x0A684, 0x0A684, UnicodeKind::Upper},
    {0x0A685, 0x0A685, UnicodeKind::Lower},
    {0x0A686, 0x0A686, UnicodeKind::Upper},
    {0x0A687, 0x0A687, UnicodeKind::Lower},
    {0x0A688, 0x0A688, UnicodeKind::Upper},
    {0x0A689, 0x0A689, UnicodeKind::Lower},
    {0x0A68A, 0x0A68A, UnicodeKind::Upper},
    {0x0A68B, 0x0A68B, UnicodeKind::Lower},
    {0x0A68C, 0x0A68C, UnicodeKind::Upper},
    {0x0A68D, 0x0A68D, UnicodeKind::Lower},
    {0x0A68E, 0x0A68E, UnicodeKind::Upper},
    {0x0A68F, 0x0A68F, UnicodeKind::Lower},
    {0x0A690, 0x0A690, UnicodeKind::Upper},
    {0x0A691, 0x0A691, UnicodeKind::Lower},
    {0x0A692, 0x0A692, UnicodeKind::Upper},
    {0x0A693, 0x0A693, UnicodeKind::Lower},
    {0x0A694, 0x0A694, UnicodeKind::Upper},
    {0x0A695, 0x0A695, UnicodeKind::Lower},
    {0x0A696, 0x0A696, UnicodeKind::Upper},
    {0x0A697, 0x0A697, UnicodeKind::Lower},
    {0x0A698, 0x0A698, UnicodeKind::Upper},
    {0x0A699, 0x0A699, UnicodeKind::Lower},
    {0x0A69A, 0x0A69A, UnicodeKind::Upper},
    {0x0A69B, 0x0A69B, UnicodeKind::Lower},
    {0x0A69C, 0x0A69D, UnicodeKind::CaselessLetter},
    {0x0A6A0, 0x0A6E5, UnicodeKind::CaselessLetter},
    {0x0A717, 0x0A71F, UnicodeKind::CaselessLetter},
    {0x0A722, 0x0A722, UnicodeKind::Upper},
    {0x0A723, 0x0A723, UnicodeKind::Lower},
    {0x0A724, 0x0A724, UnicodeKind::Upper},
    {0x0A725, 0x0A725, UnicodeKind::Lower},
    {0x0A726, 0x0A726, UnicodeKind::Upper},
    {0x0A727, 0x0A727, UnicodeKind::Lower},
    {0x0A728, 0x0A728, UnicodeKind::Upper},
    {0x0A729, 0x0A729, UnicodeKind::Lower},
    {0x0A72A, 0x0A72A, UnicodeKind::Upper},
    {0x0A72B, 0x0A72B, UnicodeKind::Lower},
    {0x0A72C, 0x0A72C, UnicodeKind::Upper},
    {0x0A72D, 0x0A72D, UnicodeKind::Lower},
    {0x0A72E, 0x0A72E, UnicodeKind::Upper},
    {0x0A72F, 0x0A731, UnicodeKind::Lower},
    {0x0A732, 0x0A732, UnicodeKind::Upper},
    {0x0A733, 0x0A733, UnicodeKind::Lower},
    {0x0A734, 0x0A734, UnicodeKind::Upper},
    {0x0A735, 0x0A735, UnicodeKind::Lower},
    {0x0A736, 0x0A736, UnicodeKind::Upper},
    {0x0A737, 0x0A737, UnicodeKind::Lower},
    {0x0A738, 0x0A738, UnicodeKind::Upper},
    {0x0A739, 0x0A739, UnicodeKind::Lower},
    {0x0A73A, 0x0A73A, UnicodeKind::Upper},
    {0x0A73B, 0x0A73B, UnicodeKind::Lower},
    {0x0A73C, 0x0A73C, UnicodeKind::Upper},
    {0x0A73D, 0x0A73D, UnicodeKind::Lower},
    {0x0A73E, 0x0A73E, UnicodeKind::Upper},
    {0x0A73F, 0x0A73F, UnicodeKind::Lower},
    {0x0A740, 0x0A740, UnicodeKind::Upper},
    {0x0A741, 0x0A741, UnicodeKind::Lower},
    {0x0A742, 0x0A742, UnicodeKind::Upper},
    {0x0A743, 0x0A743, UnicodeKind::Lower},
    {0x0A744, 0x0A744, UnicodeKind::Upper},
    {0x0A745, 0x0A745, UnicodeKind::Lower},
    {0x0A746, 0x0A746, UnicodeKind::Upper},
    {0x0A747, 0x0A747, UnicodeKind::Lower},
    {0x0A748, 0x0A748, UnicodeKind::Upper},
    {0x0A749, 0x0A749, UnicodeKind::Lower},
    {0x0A74A, 0x0A74A, UnicodeKind::Upper},
    {0x0A74B, 0x0A74B, UnicodeKind::Lower},
    {0x0A74C, 0x0A74C, UnicodeKind::Upper},
    {0x0A74D, 0x0A74D, UnicodeKind::Lower},
    {0x0A74E, 0x0A74E, UnicodeKind::Upper},
    {0x0A74F, 0x0A74F, UnicodeKind::Lower},
    {0x0A750, 0x0A750, UnicodeKind::Upper},
    {0x0A751, 0x0A751, UnicodeKind::Lower},
    {0x0A752, 0x0A752, UnicodeKind::Upper},
    {0x0A753, 0x0A753, UnicodeKind::Lower},
    {0x0A754, 0x0A754, UnicodeKind::Upper},
    {0x0A755, 0x0A755, UnicodeKind::Lower},
    {0x0A756, 0x0A756, UnicodeKind::Upper},
    {0x0A757, 0x0A757, UnicodeKind::Lower},
    {0x0A758, 0x0A758, UnicodeKind::Upper},
    {0x0A759, 0x0A759, UnicodeKind::Lower},
    {0x0A75A, 0x0A75A, UnicodeKind::Upper},
    {0x0A75B, 0x0A75B, UnicodeKind::Lower},
    {0x0A75C, 0x0A75C, UnicodeKind::Upper},
    {0x0A75D, 0x0A75D, UnicodeKind::Lower},
    {0x0A75E, 0x0A75E, UnicodeKind::Upper},
    {0x0A75F, 0x0A75F, UnicodeKind::Lower},
    {0x0A760, 0x0A760, UnicodeKind::Upper},
    {0x0A761, 0x0A761, UnicodeKind::Lower},
    {0x0A762, 0x0A762, UnicodeKind::Upper},
    {0x0A763, 0x0A763, UnicodeKind::Lower},
    {0x0A764, 0x0A764, UnicodeKind::Upper},
    {0x0A765, 0x0A765, UnicodeKind::Lower},
    {0x0A766, 0x0A766, UnicodeKind::Upper},
    {0x0A767, 0x0A767, UnicodeKind::Lower},
    {0x0A768, 0x0A768, UnicodeKind::Upper},
    {0x0A769, 0x0A769, UnicodeKind::Lower},
    {0x0A76A, 0x0A76A, UnicodeKind::Upper},
    {0x0A76B, 0x0A76B, UnicodeKind::Lower},
    {0x0A76C, 0x0A76C, UnicodeKind::Upper},
    {0x0A76D, 0x0A76D, UnicodeKind::Lower},
    {0x0A76E, 0x0A76E, UnicodeKind::Upper},
    {0x0A76F, 0x0A76F, UnicodeKind::Lower},
    {0x0A770, 0x0A770, UnicodeKind::CaselessLetter},
    {0x0A771, 0x0A778, UnicodeKind::Lower},
    {0x0A779, 0x0A779, UnicodeKind::Upper},
    {0x0A77A, 0x0A77A, UnicodeKind::Lower},
    {0x0A77B, 0x0A77B, UnicodeKind::Upper},
    {0x0A77C, 0x0A77C, UnicodeKind::Lower},
    {0x0A77D, 0x0A77E, UnicodeKind::Upper},
    {0x0A77F, 0x0A77F, UnicodeKind::Lower},
    {0x0A780, 0x0A780, UnicodeKind::Upper},
    {0x0A781, 0x0A781, UnicodeKind::Lower},
    {0x0A782, 0x0A782, UnicodeKind::Upper},
    {0x0A783, 0x0A783, UnicodeKind::Lower},
    {0x0A784, 0x0A784, UnicodeKind::Upper},
    {0x0A785, 0x0A785, UnicodeKind::Lower},
    {0x0A786, 0x0A786, UnicodeKind::Upper},
    {0x0A787, 0x0A787, UnicodeKind::Lower},
    {0x0A788, 0x0A788, UnicodeKind::CaselessLetter},
    {0x0A78B, 0x0A78B, UnicodeKind::Upper},
    {0x0A78C, 0x0A78C, UnicodeKind::Lower},
    {0x0A78D, 0x0A78D, UnicodeKind::Upper},
    {0x0A78E, 0x0A78E, UnicodeKind::Lower},
    {0x0A78F, 0x0A78F, UnicodeKind::CaselessLetter},
    {0x0A790, 0x0A790, UnicodeKind::Upper},
    {0x0A791, 0x0A791, UnicodeKind::Lower},
    {0x0A792, 0x0A792, UnicodeKind::Upper},
    {0x0A793, 0x0A795, UnicodeKind::Lower},
    {0x0A796, 0x0A796, UnicodeKind::Upper},
    {0x0A797, 0x0A797, UnicodeKind::Lower},
    {0x0A798, 0x0A798, UnicodeKind::Upper},
    {0x0A799, 0x0A799, UnicodeKind::Lower},
    {0x0A79A, 0x0A79A, UnicodeKind::Upper},
    {0x0A79B, 0x0A79B, UnicodeKind::Lower},
    {0x0A79C, 0x0A79C, UnicodeKind::Upper},
    {0x0A79D, 0x0A79D, UnicodeKind::Lower},
    {0x0A79E, 0x0A79E, UnicodeKind::Upper},
    {0x0A79F, 0x0A79F, UnicodeKind::Lower},
    {0x0A7A0, 0x0A7A0, UnicodeKind::Upper},
    {0x0A7A1, 0x0A7A1, UnicodeKind::Lower},
    {0x0A7A2, 0x0A7A2, UnicodeKind::Upper},
    {0x0A7A3, 0x0A7A3, UnicodeKind::Lower},
    {0x0A7A4, 0x0A7A4, UnicodeKind::Upper},
    {0x0A7A5, 0x0A7A5, UnicodeKind::Lower},
    {0x0A7A6, 0x0A7A6, UnicodeKind::Upper},
    {0x0A7A7, 0x0A7A7, UnicodeKind::Lower},
    {0x0A7A8, 0x0A7A8, UnicodeKind::Upper},
    {0x0A7A9, 0x0A7A9, UnicodeKind::Lower},
    {0x0A7AA, 0x0A7AE, UnicodeKind::Upper},
    {0x0A7AF, 0x0A7AF, UnicodeKind::Lower},
    {0x0A7B0, 0x0A7B4, UnicodeKind::Upper},
    {0x0A7B5, 0x0A7B5, UnicodeKind::Lower},
    {0x0A7B6, 0x0A7B6, UnicodeKind::Upper},
    {0x0A7B7, 0x0A7B7, UnicodeKind::Lower},
    {0x0A7B8, 0x0A7B8, UnicodeKind::Upper},
    {0x0A7B9, 0x0A7B9, UnicodeKind::Lower},
    {0x0A7BA, 0x0A7BA, UnicodeKind::Upper},
    {0x0A7BB, 0x0A7BB, UnicodeKind::Lower},
    {0x0A7BC, 0x0A7BC, UnicodeKind::Upper},
    {0x0A7BD, 0x0A7BD, UnicodeKind::Lower},
    {0x0A7BE, 0x0A7BE, UnicodeKind::Upper},
    {0x0A7BF, 0x0A7BF, UnicodeKind::Lower},
    {0x0A7C2, 0x0A7C2, UnicodeKind::Upper},
    {0x0A7C3, 0x0A7C3, UnicodeKind::Lower},
    {0x0A7C4, 0x0A7C7, UnicodeKind::Upper},
    {0x0A7C8, 0x0A7C8, UnicodeKind::Lower},
    {0x0A7C9, 0x0A7C9, UnicodeKind::Upper},
    {0x0A7CA, 0x0A7CA, UnicodeKind::Lower},
    {0x0A7F5, 0x0A7F5, UnicodeKind::Upper},
    {0x0A7F6, 0x0A7F6, UnicodeKind::Lower},
    {0x0A7F7, 0x0A7F9, UnicodeKind::CaselessLetter},
    {0x0A7FA, 0x0A7FA, UnicodeKind::Lower},
    {0x0A7FB, 0x0A801, UnicodeKind::CaselessLetter},
    {0x0A803, 0x0A805, UnicodeKind::CaselessLetter},
    {0x0A807, 0x0A80A, UnicodeKind::CaselessLetter},
    {0x0A80C, 0x0A822, UnicodeKind::CaselessLetter},
    {0x0A840, 0x0A873, UnicodeKind::CaselessLetter},
    {0x0A882, 0x0A8B3, UnicodeKind::CaselessLetter},
    {0x0A8D0, 0x0A8D9, UnicodeKind::Digit},
    {0x0A8F2, 0x0A8F7, UnicodeKind::CaselessLetter},
    {0x0A8FB, 0x0A8FB, UnicodeKind::CaselessLetter},
    {0x0A8FD, 0x0A8FE, UnicodeKind::CaselessLetter},
    {0x0A900, 0x0A909, UnicodeKind::Digit},
    {0x0A90A, 0x0A925, UnicodeKind::CaselessLetter},
    {0x0A930, 0x0A946, UnicodeKind::CaselessLetter},
    {0x0A960, 0x0A97C, UnicodeKind::CaselessLetter},
    {0x0A984, 0x0A9B2, UnicodeKind::CaselessLetter},
    {0x0A9CF, 0x0A9CF, UnicodeKind::CaselessLetter},
    {0x0A9D0, 0x0A9D9, UnicodeKind::Digit},
    {0x0A9E0, 0x0A9E4, UnicodeKind::CaselessLetter},
    {0x0A9E6, 0x0A9EF, UnicodeKind::CaselessLetter},
    {0x0A9F0, 0x0A9F9, UnicodeKind::Digit},
    {0x0A9FA, 0x0A9FE, UnicodeKind::CaselessLetter},
    {0x0AA00, 0x0AA28, UnicodeKind::CaselessLetter},
    {0x0AA40, 0x0AA42, UnicodeKind::CaselessLetter},
    {0x0AA44, 0x0AA4B, UnicodeKind::CaselessLetter},
    {0x0AA50, 0x0AA59, UnicodeKind::Digit},
    {0x0AA60, 0x0AA76, UnicodeKind::CaselessLetter},
    {0x0AA7A, 0x0AA7A, UnicodeKind::CaselessLetter},
    {0x0AA7E, 0x0AAAF, UnicodeKind::CaselessLetter},
    {0x0AAB1, 0x0AAB1, UnicodeKind::CaselessLetter},
    {0x0AAB5, 0x0AAB6, UnicodeKind::CaselessLetter},
    {0x0AAB9, 0x0AABD, UnicodeKind::CaselessLetter},
    {0x0AAC0, 0x0AAC0, UnicodeKind::CaselessLetter},
    {0x0AAC2, 0x0AAC2, UnicodeKind::CaselessLetter},
    {0x0AADB, 0x0AADD, UnicodeKind::CaselessLetter},
    {0x0AAE0, 0x0AAEA, UnicodeKind::CaselessLetter},
    {0x0AAF2, 0x0AAF4, UnicodeKind::CaselessLetter},
    {0x0AB01, 0x0AB06, UnicodeKind::CaselessLetter},
    {0x0AB09, 0x0AB0E, UnicodeKind::CaselessLetter},
    {0x0AB11, 0x0AB16, UnicodeKind::CaselessLetter},
    {0x0AB20, 0x0AB26, UnicodeKind::CaselessLetter},
    {0x0AB28, 0x0AB2E, UnicodeKind::CaselessLetter},
    {0x0AB30, 0x0AB5A, UnicodeKind::Lower},
    {0x0AB5C, 0x0AB5F, UnicodeKind::CaselessLetter},
    {0x0AB60, 0x0AB68, UnicodeKind::Lower},
    {0x0AB69, 0x0AB69, UnicodeKind::CaselessLetter},
    {0x0AB70, 0x0ABBF, UnicodeKind::Lower},
    {0x0ABC0, 0x0ABE2, UnicodeKind::CaselessLetter},
    {0x0ABF0, 0x0ABF9, UnicodeKind::Digit},
    {0x0AC00, 0x0D7A3, UnicodeKind::CaselessLetter},
    {0x0D7B0, 0x0D7C6, UnicodeKind::CaselessLetter},
    {0x0D7CB, 0x0D7FB, UnicodeKind::CaselessLetter},
    {0x0F900, 0x0FA6D, UnicodeKind::CaselessLetter},
    {0x0FA70, 0x0FAD9, UnicodeKind::CaselessLetter},
    {0x0FB00, 0x0FB06, UnicodeKind::Lower},
    {0x0FB13, 0x0FB17, UnicodeKind::Lower},
    {0x0FB1D, 0x0FB1D, UnicodeKind::CaselessLetter},
    {0x0FB1F, 0x0FB28, UnicodeKind::CaselessLetter},
    {0x0FB2A, 0x0FB36, UnicodeKind::CaselessLetter},
    {0x0FB38, 0x0FB3C, UnicodeKind::CaselessLetter},
    {0x0FB3E, 0x0FB3E, UnicodeKind::CaselessLetter},
    {0x0FB40, 0x0FB41, UnicodeKind::CaselessLetter},
    {0x0FB43, 0x0FB44, UnicodeKind::CaselessLetter},
    {0x0FB46, 0x0FBB1, UnicodeKind::CaselessLetter},
    {0x0FBD3, 0x0FD3D, UnicodeKind::CaselessLetter},
    {0x0FD50, 0x0FD8F, UnicodeKind::CaselessLetter},
    {0x0FD92, 0x0FDC7, UnicodeKind::CaselessLetter},
    {0x0FDF0, 0x0FDFB, UnicodeKind::CaselessLetter},
    {0x0FE70, 0x0FE74, UnicodeKind::CaselessLetter},
    {0x0FE76, 0x0FEFC, UnicodeKind::CaselessLetter},
    {0x0FF10, 0x0FF19, UnicodeKind::Digit},
    {0x0FF21, 0x0FF3A, UnicodeKind::Upper},
    {0x0FF41, 0x0FF5A, UnicodeKind::Lower},
    {0x0FF66, 0x0FFBE, UnicodeKind::CaselessLetter},
    {0x0FFC2, 0x0FFC7, UnicodeKind::CaselessLetter},
    {0x0FFCA, 0x0FFCF, UnicodeKind::CaselessLetter},
    {0x0FFD2, 0x0FFD7, UnicodeKind::CaselessLetter},
    {0x0FFDA, 0x0FFDC, UnicodeKind::CaselessLetter},
    {0x10000, 0x1000B, UnicodeKind::CaselessLetter},
    {0x1000D, 0x10026, UnicodeKind::CaselessLetter},
    {0x10028, 0x1003A, UnicodeKind::CaselessLetter},
    {0x1003C, 0x1003D, UnicodeKind::CaselessLetter},
    {0x1003F, 0x1004D, UnicodeKind::CaselessLetter},
    {0x10050, 0x1005D, UnicodeKind::CaselessLetter},
    {0x10080, 0x100FA, UnicodeKind::CaselessLetter},
    {0x10280, 0x1029C, UnicodeKind::CaselessLetter},
    {0x102A0, 0x102D0, UnicodeKind::CaselessLetter},
    {0x10300, 0x1031F, UnicodeKind::CaselessLetter},
    {0x1032D, 0x10340, UnicodeKind::CaselessLetter},
    {0x10342, 0x10349, UnicodeKind::CaselessLetter},
    {0x10350, 0x10375, UnicodeKind::CaselessLetter},
    {0x10380, 0x1039D, UnicodeKind::CaselessLetter},
    {0x103A0, 0x103C3, UnicodeKind::CaselessLetter},
    {0x103C8, 0x103CF, UnicodeKind::CaselessLetter},
    {0x10400, 0x10427, UnicodeKind::Upper},
    {0x10428, 0x1044F, UnicodeKind::Lower},
    {0x10450, 0x1049D, UnicodeKind::CaselessLetter},
    {0x104A0, 0x104A9, UnicodeKind::Digit},
    {0x104B0, 0x104D3, UnicodeKind::Upper},
    {0x104D8, 0x104FB, UnicodeKind::Lower},
    {0x10500, 0x10527, UnicodeKind::CaselessLetter},
    {0x10530, 0x10563, UnicodeKind::CaselessLetter},
    {0x10600, 0x10736, UnicodeKind::CaselessLetter},
    {0x10740, 0x10755, UnicodeKind::CaselessLetter},
    {0x10760, 0x10767, UnicodeKind::CaselessLetter},
    {0x10800, 0x10805, UnicodeKind::CaselessLetter},
    {0x10808, 0x10808, UnicodeKind::CaselessLetter},
    {0x1080A, 0x10835, UnicodeKind::CaselessLetter},
    {0x10837, 0x10838, UnicodeKind::CaselessLetter},
    {0x1083C, 0x1083C, UnicodeKind::CaselessLetter},
    {0x1083F, 0x10855, UnicodeKind::CaselessLetter},
    {0x10860, 0x10876, UnicodeKind::CaselessLetter},
    {0x10880, 0x1089E, UnicodeKind::CaselessLetter},
    {0x108E0, 0x108F2, UnicodeKind::CaselessLetter},
    {0x108F4, 0x108F5, UnicodeKind::CaselessLetter},
    {0x10900, 0x10915, UnicodeKind::CaselessLetter},
    {0x10920, 0x10939, UnicodeKind::CaselessLetter},
    {0x10980, 0x109B7, UnicodeKind::CaselessLetter},
    {0x109BE, 0x109BF, UnicodeKind::CaselessLetter},
    {0x10A00, 0x10A00, UnicodeKind::CaselessLetter},
    {0x10A10, 0x10A13, UnicodeKind::CaselessLetter},
    {0x10A15, 0x10A17, UnicodeKind::CaselessLetter},
    {0x10A19, 0x10A35, UnicodeKind::CaselessLetter},
    {0x10A60, 0x10A7C, UnicodeKind::CaselessLetter},
    {0x10A80, 0x10A9C, UnicodeKind::CaselessLetter},
    {0x10AC0, 0x10AC7, UnicodeKind::CaselessLetter},
    {0x10AC9, 0x10AE4, UnicodeKind::CaselessLetter},
    {0x10B00, 0x10B35, UnicodeKind::CaselessLetter},
    {0x10B40, 0x10B55, UnicodeKind::CaselessLetter},
    {0x10B60, 0x10B72, UnicodeKind::CaselessLetter},
    {0x10B80, 0x10B91, UnicodeKind::CaselessLetter},
    {0x10C00, 0x10C48, UnicodeKind::CaselessLetter},
    {0x10C80, 0x10CB2, UnicodeKind::Upper},
    {0x10CC0, 0x10CF2, UnicodeKind::Lower},
    {0x10D00, 0x10D23, UnicodeKind::CaselessLetter},
    {0x10D30, 0x10D39, UnicodeKind::Digit},
    {0x10E80, 0x10EA9, UnicodeKind::CaselessLetter},
    {0x10EB0, 0x10EB1, UnicodeKind::CaselessLetter},
    {0x10F00, 0x10F1C, UnicodeKind::CaselessLetter},
    {0x10F27, 0x10F27, UnicodeKind::CaselessLetter},
    {0x10F30, 0x10F45, UnicodeKind::CaselessLetter},
    {0x10FB0, 0x10FC4, UnicodeKind::CaselessLetter},
    {0x10FE0, 0x10FF6, UnicodeKind::CaselessLetter},
    {0x11003, 0x11037, UnicodeKind::CaselessLetter},
    {0x11066, 0x1106F, UnicodeKind::Digit},
    {0x11083, 0x110AF, UnicodeKind::CaselessLetter},
    {0x110D0, 0x110E8, UnicodeKind::CaselessLetter},
    {0x110F0, 0x110F9, UnicodeKind::Digit},
    {0x11103, 0x11126, UnicodeKind::CaselessLetter},
    {0x11136, 0x1113F, UnicodeKind::Digit},
    {0x11144, 0x11144, UnicodeKind::CaselessLetter},
    {0x11147, 0x11147, UnicodeKind::CaselessLetter},
    {0x11150, 0x11172, UnicodeKind::CaselessLetter},
    {0x11176, 0x11176, UnicodeKind::CaselessLetter},
    {0x11183, 0x111B2, UnicodeKind::CaselessLetter},
    {0x111C1, 0x111C4, UnicodeKind::CaselessLetter},
    {0x111D0, 0x111D9, UnicodeKind::Digit},
    {0x111DA, 0x111DA, UnicodeKind::CaselessLetter},
    {0x111DC, 0x111DC, UnicodeKind::CaselessLetter},
    {0x11200, 0x11211, UnicodeKind::CaselessLetter},
    {0x11213, 0x1122B, UnicodeKind::CaselessLetter},
    {0x11280, 0x11286, UnicodeKind::CaselessLetter},
    {0x11288, 0x11288, UnicodeKind::CaselessLetter},
    {0x1128A, 0x1128D, UnicodeKind::CaselessLetter},
    {0x1128F, 0x1129D, UnicodeKind::CaselessLetter},
    {0x1129F, 0x112A8, UnicodeKind::CaselessLetter},
    {0x112B0, 0x112DE, UnicodeKind::CaselessLetter},
    {0x112F0, 0x112F9, UnicodeKind::Digit},
    {0x11305, 0x1130C, UnicodeKind::CaselessLetter},
    {0x1130F, 0x11310, UnicodeKind::CaselessLetter},
    {0x11313, 0x11328, UnicodeKind::CaselessLetter},
    {0x1132A, 0x11330, UnicodeKind::CaselessLetter},
    {0x11332, 0x11333, UnicodeKind::CaselessLetter},
    {0x11335, 0x11339, UnicodeKind::CaselessLetter},
    {0x1133D, 0x1133D, UnicodeKind::CaselessLetter},
    {0x11350, 0x11350, UnicodeKind::CaselessLetter},
    {0x1135D, 0x11361, UnicodeKind::CaselessLetter},
    {0x11400, 0x11434, UnicodeKind::CaselessLetter},
    {0x11447, 0x1144A, UnicodeKind::CaselessLetter},
    {0x11450, 0x11459, UnicodeKind::Digit},
    {0x1145F, 0x11461, UnicodeKind::CaselessLetter},
    {0x11480, 0x114AF, UnicodeKind::CaselessLetter},
    {0x114C4, 0x114C5, UnicodeKind::CaselessLetter},
    {0x114C7, 0x114C7, UnicodeKind::CaselessLetter},
    {0x114D0, 0x114D9, UnicodeKind::Digit},
    {0x11580, 0x115AE, UnicodeKind::CaselessLetter},
    {0x115D8, 0x115DB, UnicodeKind::CaselessLetter},
    {0x11600, 0x1162F, UnicodeKind::CaselessLetter},
    {0x11644, 0x11644, UnicodeKind::CaselessLetter},
    {0x11650, 0x11659, UnicodeKind::Digit},
    {0x11680, 0x116AA, UnicodeKind::CaselessLetter},
    {0x116B8, 0x116B8, UnicodeKind::CaselessLetter},
    {0x116C0, 0x116C9, UnicodeKind::Digit},
    {0x11700, 0x1171A, UnicodeKind::CaselessLetter},
    {0x11730, 0x11739, UnicodeKind::Digit},
    {0x11800, 0x1182B, UnicodeKind::CaselessLetter},
    {0x118A0, 0x118BF, UnicodeKind::Upper},
    {0x118C0, 0x118DF, UnicodeKind::Lower},
    {0x118E0, 0x118E9, UnicodeKind::Digit},
    {0x118FF, 0x11906, UnicodeKind::CaselessLetter},
    {0x11909, 0x11909, UnicodeKind::CaselessLetter},
    {0x1190C, 0x11913, UnicodeKind::CaselessLetter},
    {0x11915, 0x11916, UnicodeKind::CaselessLetter},
    {0x11918, 0x1192F, UnicodeKind::CaselessLetter},
    {0x1193F, 0x1193F, UnicodeKind::CaselessLetter},
    {0x11941, 0x11941, UnicodeKind::CaselessLetter},
    {0x11950, 0x11959, UnicodeKind::Digit},
    {0x119A0, 0x119A7, UnicodeKind::CaselessLetter},
    {0x119AA, 0x119D0, UnicodeKind::CaselessLetter},
    {0x119E1, 0x119E1, UnicodeKind::CaselessLetter},
    {0x119E3, 0x119E3, UnicodeKind::CaselessLetter},
    {0x11A00, 0x11A00, UnicodeKind::CaselessLetter},
    {0x11A0B, 0x11A32, UnicodeKind::CaselessLetter},
    {0x11A3A, 0x11A3A, UnicodeKind::CaselessLetter},
    {0x11A50, 0x11A50, UnicodeKind::CaselessLetter},
    {0x11A5C, 0x11A89, UnicodeKind::CaselessLetter},
    {0x11A9D, 0x11A9D, UnicodeKind::CaselessLetter},
    {0x11AC0, 0x11AF8, UnicodeKind::CaselessLetter},
    {0x11C00, 0x11C08, UnicodeKind::CaselessLetter},
    {0x11C0A, 0x11C2E, UnicodeKind::CaselessLetter},
    {0x11C40, 0x11C40, UnicodeKind::CaselessLetter},
    {0x11C50, 0x11C59, UnicodeKind::Digit},
    {0x11C72, 0x11C8F, UnicodeKind::CaselessLetter},
    {0x11D00, 0x11D06, UnicodeKind::CaselessLetter},
    {0x11D08, 0x11D09, UnicodeKind::CaselessLetter},
    {0x11D0B, 0x11D30, UnicodeKind::CaselessLetter},
    {0x11D46, 0x11D46, UnicodeKind::CaselessLetter},
    {0x11D50, 0x11D59, UnicodeKind::Digit},
    {0x11D60, 0x11D65, UnicodeKind::CaselessLetter},
    {0x11D67, 0x11D68, UnicodeKind::CaselessLetter},
    {0x11D6A, 0x11D89, UnicodeKind::CaselessLetter},
    {0x11D98, 0x11D98, UnicodeKind::CaselessLetter},
    {0x11DA0, 0x11DA9, UnicodeKind::Digit},
    {0x11EE0, 0x11EF2, UnicodeKind::CaselessLetter},
    {0x11FB0, 0x11FB0, UnicodeKind::CaselessLetter},
    {0x12000, 0x12399, UnicodeKind::CaselessLetter},
    {0x12480, 0x12543, UnicodeKind::CaselessLetter},
    {0x13000, 0x1342E, UnicodeKind::CaselessLetter},
    {0x14400, 0x14646, UnicodeKind::CaselessLetter},
    {0x16800, 0x16A38, UnicodeKind::CaselessLetter},
    {0x16A40, 0x16A5E, UnicodeKind::CaselessLetter},
    {0x16A60, 0x16A69, UnicodeKind::Digit},
    {0x16AD0, 0x16AED, UnicodeKind::CaselessLetter},
    {0x16B00, 0x16B2F, UnicodeKind::CaselessLetter},
    {0x16B40, 0x16B43, UnicodeKind::CaselessLetter},
    {0x16B50, 0x16B59, UnicodeKind::Digit},
    {0x16B63, 0x16B77, UnicodeKind::CaselessLetter},
    {0x16B7D, 0x16B8F, UnicodeKind::CaselessLetter},
    {0x16E40, 0x16E5F, UnicodeKind::Upper},
    {0x16E60, 0x16E7F, UnicodeKind::Lower},
    {0x16F00, 0x16F4A, UnicodeKind::CaselessLetter},
    {0x16F50, 0x16F50, UnicodeKind::CaselessLetter},
    {0x16F93, 0x16F9F, UnicodeKind::CaselessLetter},
    {0x16FE0, 0x16FE1, UnicodeKind::CaselessLetter},
    {0x16FE3, 0x16FE3, UnicodeKind::CaselessLetter},
    {0x17000, 0x187F7, UnicodeKind::CaselessLetter},
    {0x18800, 0x18CD5, UnicodeKind::CaselessLetter},
    {0x18D00, 0x18D08, UnicodeKind::CaselessLetter},
    {0x1B000, 0x1B11E, UnicodeKind::CaselessLetter},
    {0x1B150, 0x1B152, UnicodeKind::CaselessLetter},
    {0x1B164, 0x1B167, UnicodeKind::CaselessLetter},
    {0x1B170, 0x1B2FB, UnicodeKind::CaselessLetter},
    {0x1BC00, 0x1BC6A, UnicodeKind::CaselessLetter},
    {0x1BC70, 0x1BC7C, UnicodeKind::CaselessLetter},
    {0x1BC80, 0x1BC88, UnicodeKind::CaselessLetter},
    {0x1BC90, 0x1BC99, UnicodeKind::CaselessLetter},
    {0x1D400, 0x1D419, UnicodeKind::Upper},
    {0x1D41A, 0x1D433, UnicodeKind::Lower},
    {0x1D434, 0x1D44D, UnicodeKind::Upper},
    {0x1D44E, 0x1D454, UnicodeKind::Lower},
    {0x1D456, 0x1D467, UnicodeKind::Lower},
    {0x1D468, 0x1D481, UnicodeKind::Upper},
    {0x1D482, 0x1D49B, UnicodeKind::Lower},
    {0x1D49C, 0x1D49C, UnicodeKind::Upper},
    {0x1D49E, 0x1D49F, UnicodeKind::Upper},
    {0x1D4A2, 0x1D4A2, UnicodeKind::Upper},
    {0x1D4A5, 0x1D4A6, UnicodeKind::Upper},
    {0x1D4A9, 0x1D4AC, UnicodeKind::Upper},
    {0x1D4AE, 0x1D4B5, UnicodeKind::Upper},
    {0x1D4B6, 0x1D4B9, UnicodeKind::Lower},
    {0x1D4BB, 0x1D4BB, UnicodeKind::Lower},
    {0x1D4BD, 0x1D4C3, UnicodeKind::Lower},
    {0x1D4C5, 0x1D4CF, UnicodeKind::Lower},
    {0x1D4D0, 0x1D4E9, UnicodeKind::Upper},
    {0x1D4EA, 0x1D503, UnicodeKind::Lower},
    {0x1D504, 0x1D505, UnicodeKind::Upper},
    {0x1D507, 0x1D50A, UnicodeKind::Upper},
    {0x1D50D, 0x1D514, UnicodeKind::Upper},
    {0x1D516, 0x1D51C, UnicodeKind::Upper},
    {0x1D51E, 0x1D537, UnicodeKind::Lower},
    {0x1D538, 0x1D539, UnicodeKind::Upper},
    {0x1D53B, 0x1D53E, UnicodeKind::Upper},
    {0x1D540, 0x1D544, UnicodeKind::Upper},
    {0x1D546, 0x1D546, UnicodeKind::Upper},
    {0x1D54A, 0x1D550, UnicodeKind::Upper},
    {0x1D552, 0x1D56B, UnicodeKind::Lower},
    {0x1D56C, 0x1D585, UnicodeKind::Upper},
    {0x1D586, 0x1D59F, UnicodeKind::Lower},
    {0x1D5A0, 0x1D5B9, UnicodeKind::Upper},
    {0x1D5BA, 0x1D5D3, UnicodeKind::Lower},
    {0x1D5D4, 0x1D5ED, UnicodeKind::Upper},
    {0x1D5EE, 0x1D607, UnicodeKind::Lower},
    {0x1D608, 0x1D621, UnicodeKind::Upper},
    {0x1D622, 0x1D63B, UnicodeKind::Lower},
    {0x1D63C, 0x1D655, UnicodeKind::Upper},
    {0x1D656, 0x1D66F, UnicodeKind::Lower},
    {0x1D670, 0x1D689, UnicodeKind::Upper},
    {0x1D68A, 0x1D6A5, UnicodeKind::Lower},
    {0x1D6A8, 0x1D6C0, UnicodeKind::Upper},
    {0x1D6C2, 0x1D6DA, UnicodeKind::Lower},
    {0x1D6DC, 0x1D6E1, UnicodeKind::Lower},
    {0x1D6E2, 0x1D6FA, UnicodeKind::Upper},
    {0x1D6FC, 0x1D714, UnicodeKind::Lower},
    {0x1D716, 0x1D71B, UnicodeKind::Lower},
    {0x1D71C, 0x1D734, UnicodeKind::Upper},
    {0x1D736, 0x1D74E, UnicodeKind::Lower},
    {0x1D750, 0x1D755, UnicodeKind::Lower},
    {0x1D756, 0x1D76E, UnicodeKind::Upper},
    {0x1D770, 0x1D788, UnicodeKind::Lower},
    {0x1D78A, 0x1D78F, UnicodeKind::Lower},
    {0x1D790, 0x1D7A8, UnicodeKind::Upper},
    {0x1D7AA, 0x1D7C2, UnicodeKind::Lower},
    {0x1D7C4, 0x1D7C9, UnicodeKind::Lower},
    {0x1D7CA, 0x1D7CA, UnicodeKind::Upper},
    {0x1D7CB, 0x1D7CB, UnicodeKind::Lower},
    {0x1D7CE, 0x1D7FF, UnicodeKind::Digit},
    {0x1E100, 0x1E12C, UnicodeKind::CaselessLetter},
    {0x1E137, 0x1E13D, UnicodeKind::CaselessLetter},
    {0x1E140, 0x1E149, UnicodeKind::Digit},
    {0x1E14E, 0x1E14E, UnicodeKind::CaselessLetter},
    {0x1E2C0, 0x1E2EB, UnicodeKind::CaselessLetter},
    {0x1E2F0, 0x1E2F9, UnicodeKind::Digit},
    {0x1E800, 0x1E8C4, UnicodeKind::CaselessLetter},
    {0x1E900, 0x1E921, UnicodeKind::Upper},
    {0x1E922, 0x1E943, UnicodeKind::Lower},
    {0x1E94B, 0x1E94B, UnicodeKind::CaselessLetter},
    {0x1E950, 0x1E959, UnicodeKind::Digit},
    {0x1EE00, 0x1EE03, UnicodeKind::CaselessLetter},
    {0x1EE05, 0x1EE1F, UnicodeKind::CaselessLetter},
    {0x1EE21, 0x1EE22, UnicodeKind::CaselessLetter},
    {0x1EE24, 0x1EE24, UnicodeKind::CaselessLetter},
    {0x1EE27, 0x1EE27, UnicodeKind::CaselessLetter},
    {0x1EE29, 0x1EE32, UnicodeKind::CaselessLetter},
    {0x1EE34, 0x1EE37, UnicodeKind::CaselessLetter},
    {0x1EE39, 0x1EE39, UnicodeKind::CaselessLetter},
    {0x1EE3B, 0x1EE3B, UnicodeKind::CaselessLetter},
    {0x1EE42, 0x1EE42, UnicodeKind::CaselessLetter},
    {0x1EE47, 0x1EE47, UnicodeKind::CaselessLetter},
    {0x1EE49, 0x1EE49, UnicodeKind::CaselessLetter},
    {0x1EE4B, 0x1EE4B, UnicodeKind::CaselessLetter},
    {0x1EE4D, 0x1EE4F, UnicodeKind::CaselessLetter},
    {0x1EE51, 0x1EE52, UnicodeKind::CaselessLetter},
    {0x1EE54, 0x1EE54, UnicodeKind::CaselessLetter},
    {0x1EE57, 0x1EE57, UnicodeKind::CaselessLetter},
    {0x1EE59, 0x1EE59, UnicodeKind::CaselessLetter},
    {0x1EE5B, 0x1EE5B, UnicodeKind::CaselessLetter},
    {0x1EE5D, 0x1EE5D, UnicodeKind::CaselessLetter},
    {0x1EE5F, 0x1EE5F, UnicodeKind::CaselessLetter},
    {0x1EE61, 0x1EE62, UnicodeKind::CaselessLetter},
    {0x1EE64, 0x1EE64, UnicodeKind::CaselessLetter},
    {0x1EE67, 0x1EE6A, UnicodeKind::CaselessLetter},
    {0x1EE6C, 0x1EE72, UnicodeKind::CaselessLetter},
    {0x1EE74, 0x1EE77, UnicodeKind::CaselessLetter},
    {0x1EE79, 0x1EE7C, UnicodeKind::CaselessLetter},
    {0x1EE7E, 0x1EE7E, UnicodeKind::CaselessLetter},
    {0x1EE80, 0x1EE89, UnicodeKind::CaselessLetter},
    {0x1EE8B, 0x1EE9B, UnicodeKind::CaselessLetter},
    {0x1EEA1, 0x1EEA3, UnicodeKind::CaselessLetter},
    {0x1EEA5, 0x1EEA9, UnicodeKind::CaselessLetter},
    {0x1EEAB, 0x1EEBB, UnicodeKind::CaselessLetter},
    {0x1FBF0, 0x1FBF9, UnicodeKind::Digit},
    {0x20000, 0x2A6DD, UnicodeKind::CaselessLetter},
    {0x2A700, 0x2B734, UnicodeKind::CaselessLetter},
    {0x2B740, 0x2B81D, UnicodeKind::CaselessLetter},
    {0x2B820, 0x2CEA1, UnicodeKind::CaselessLetter},
    {0x2CEB0, 0x2EBE0, UnicodeKind::CaselessLetter},
    {0x2F800, 0x2FA1D, UnicodeKind::CaselessLetter},
    {0x30000, 0x3134A, UnicodeKind::CaselessLetter},
};

}  // namespace fileclass::detail
