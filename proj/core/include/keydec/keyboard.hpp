#pragma once

#include <array>
#include <string>
#include <vector>

#include "keydec/common.hpp"

namespace keydec {

// 29-way character space: 26 letters, space, one class for all digits,
// one class for everything else.
inline constexpr int kNumClasses = 29;
inline constexpr int kSpaceClass = 26;
inline constexpr int kNumberClass = 27;
inline constexpr int kSpecialClass = 28;

enum class KeyKind { Letter, Space, Number, Special };
enum class Hand { Left, Right };

struct KeyClass {
    int id;         // [0, 28]
    KeyKind kind;
    bool operator==(const KeyClass&) const = default;
};

// Total on single characters (Unicode code points); letters are case-folded.
KeyClass classify_key(char32_t c);

// Display glyph for a class id: letters as themselves, space as ' ',
// number as '#', special as '*'.
char class_to_char(int id);

// Left/right split of the physical QWERTY layout; Y, H, B and everything to
// their right belong to the right hand. Throws DataError for non-letters.
Hand hand_of(char letter);

bool is_letter_class(int id);

struct KeyPosition {
    double x;
    double y;
};

// Physical QWERTY geometry over the 26 letter keys. Row stagger 0.0 / 0.25 /
// 0.75 key-units; distances normalized by the max pairwise distance.
class KeyboardLayout {
public:
    // Built-in QWERTY layout.
    static const KeyboardLayout& qwerty();

    // Optional override: JSON object mapping key -> [x, y, "left"|"right"].
    static KeyboardLayout from_json_file(const std::string& path);

    KeyPosition position(char letter) const;
    Hand hand(char letter) const;
    double max_pairwise_distance() const { return max_dist_; }

    // Euclidean distance in key-units, before normalization.
    double raw_distance(char a, char b) const;
    // Normalized to [0, 1] by the max pairwise distance.
    double distance(char a, char b) const;

    // Letters within `max_units` key-units of `letter` (excluding itself).
    std::vector<char> neighbors(char letter, double max_units) const;

private:
    KeyboardLayout() = default;
    void finalize();

    std::array<KeyPosition, 26> pos_{};
    std::array<Hand, 26> hand_{};
    double max_dist_ = 0.0;
};

}  // namespace keydec
