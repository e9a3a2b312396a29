#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "keydec/common.hpp"

namespace keydec {

struct KeystrokeEvent {
    double time = 0.0;             // seconds from recording start
    char pressed = '\0';
    std::optional<char> target;    // empty for insertions
    bool is_typo = false;
};

struct SentenceTrial {
    int subject_id = 0;
    int sentence_id = 0;
    std::string read_text;
    std::string typed_text;
    std::vector<KeystrokeEvent> events;
};

enum class EditTag { Match, Substitute, Insert, Delete };

struct EditPair {
    std::optional<char> pressed;    // typed character (absent for deletions)
    std::optional<char> intended;   // target character (absent for insertions)
    EditTag tag;
};

// Ratcliff-Obershelp alignment of typed against target: recursively anchor on
// the longest common substring (ties: leftmost in target, then leftmost in
// typed), then pair the residue positionally. Every character of both strings
// appears exactly once in the result.
std::vector<EditPair> align(std::string_view typed, std::string_view target);

// substitutions + insertions + deletions
int edit_count(const std::vector<EditPair>& pairs);

// Fill target/is_typo on trial.events from align(typed_text, read_text).
// Throws DataError if events and typed_text disagree.
void label_events(SentenceTrial& trial);

struct FilterReport {
    std::vector<SentenceTrial> kept;
    size_t removed = 0;
    double removal_fraction = 0.0;
};

// Drop trials with strictly more than `max_edits` edits.
FilterReport filter_sentences(std::vector<SentenceTrial> trials, int max_edits = 10);

}  // namespace keydec
