#include "keydec/keyboard.hpp"

#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

namespace keydec {

KeyClass classify_key(char32_t c) {
    if (c >= U'A' && c <= U'Z') c = c - U'A' + U'a';
    if (c >= U'a' && c <= U'z') {
        return {static_cast<int>(c - U'a'), KeyKind::Letter};
    }
    if (c == U' ') return {kSpaceClass, KeyKind::Space};
    if (c >= U'0' && c <= U'9') return {kNumberClass, KeyKind::Number};
    return {kSpecialClass, KeyKind::Special};
}

char class_to_char(int id) {
    if (id >= 0 && id < 26) return static_cast<char>('a' + id);
    if (id == kSpaceClass) return ' ';
    if (id == kNumberClass) return '#';
    if (id == kSpecialClass) return '*';
    throw DataError("class id out of range: " + std::to_string(id));
}

bool is_letter_class(int id) {
    return id >= 0 && id < 26;
}

namespace {

constexpr const char* kRows[3] = {"qwertyuiop", "asdfghjkl", "zxcvbnm"};
constexpr double kStagger[3] = {0.0, 0.25, 0.75};
constexpr const char* kRightHand = "yuiophjklnmb";

int letter_index(char letter) {
    if (letter >= 'A' && letter <= 'Z') letter = static_cast<char>(letter - 'A' + 'a');
    if (letter < 'a' || letter > 'z') {
        throw DataError(std::string("hand/position undefined for non-letter key '") +
                        letter + "'");
    }
    return letter - 'a';
}

}  // namespace

Hand hand_of(char letter) {
    return KeyboardLayout::qwerty().hand(letter);
}

const KeyboardLayout& KeyboardLayout::qwerty() {
    static const KeyboardLayout layout = [] {
        KeyboardLayout l;
        for (int row = 0; row < 3; ++row) {
            const char* keys = kRows[row];
            for (int col = 0; keys[col] != '\0'; ++col) {
                const int idx = keys[col] - 'a';
                l.pos_[idx] = {kStagger[row] + col, static_cast<double>(row)};
            }
        }
        for (int i = 0; i < 26; ++i) l.hand_[i] = Hand::Left;
        for (const char* p = kRightHand; *p; ++p) l.hand_[*p - 'a'] = Hand::Right;
        l.finalize();
        return l;
    }();
    return layout;
}

KeyboardLayout KeyboardLayout::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MissingArtifactError("layout file not found: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError("layout JSON parse error: " + std::string(e.what()));
    }
    KeyboardLayout l;
    std::array<bool, 26> seen{};
    for (const auto& [key, val] : j.items()) {
        if (key.size() != 1) throw FormatError("layout key must be a single letter: " + key);
        const int idx = letter_index(key[0]);
        if (!val.is_array() || val.size() != 3) {
            throw FormatError("layout entry must be [x, y, hand]: " + key);
        }
        l.pos_[idx] = {val[0].get<double>(), val[1].get<double>()};
        const std::string hand = val[2].get<std::string>();
        if (hand == "left") {
            l.hand_[idx] = Hand::Left;
        } else if (hand == "right") {
            l.hand_[idx] = Hand::Right;
        } else {
            throw FormatError("hand must be \"left\" or \"right\": " + key);
        }
        seen[idx] = true;
    }
    for (int i = 0; i < 26; ++i) {
        if (!seen[i]) {
            throw FormatError(std::string("layout is missing letter '") +
                              static_cast<char>('a' + i) + "'");
        }
    }
    l.finalize();
    return l;
}

void KeyboardLayout::finalize() {
    max_dist_ = 0.0;
    for (int a = 0; a < 26; ++a) {
        for (int b = a + 1; b < 26; ++b) {
            const double dx = pos_[a].x - pos_[b].x;
            const double dy = pos_[a].y - pos_[b].y;
            max_dist_ = std::max(max_dist_, std::hypot(dx, dy));
        }
    }
    if (max_dist_ <= 0.0) throw DataError("degenerate keyboard layout: all keys coincide");
}

KeyPosition KeyboardLayout::position(char letter) const {
    return pos_[letter_index(letter)];
}

Hand KeyboardLayout::hand(char letter) const {
    return hand_[letter_index(letter)];
}

double KeyboardLayout::raw_distance(char a, char b) const {
    const KeyPosition pa = pos_[letter_index(a)];
    const KeyPosition pb = pos_[letter_index(b)];
    return std::hypot(pa.x - pb.x, pa.y - pb.y);
}

double KeyboardLayout::distance(char a, char b) const {
    return raw_distance(a, b) / max_dist_;
}

std::vector<char> KeyboardLayout::neighbors(char letter, double max_units) const {
    std::vector<char> out;
    for (char c = 'a'; c <= 'z'; ++c) {
        if (c == letter) continue;
        if (raw_distance(letter, c) <= max_units) out.push_back(c);
    }
    return out;
}

}  // namespace keydec
