#include "keydec/textalign.hpp"

#include <algorithm>

namespace keydec {

namespace {

struct MatchBlock {
    size_t i = 0;  // start in typed
    size_t j = 0;  // start in target
    size_t len = 0;
};

// Longest common substring of typed[ilo, ihi) and target[jlo, jhi).
// Ties resolved to the leftmost occurrence in target, then in typed.
MatchBlock longest_match(std::string_view typed, size_t ilo, size_t ihi,
                         std::string_view target, size_t jlo, size_t jhi) {
    MatchBlock best;
    const size_t m = ihi - ilo;
    if (m == 0 || jhi == jlo) return best;
    // run[i] = length of common suffix ending at typed[i-1], target[j-1]
    std::vector<size_t> run(m + 1, 0), prev(m + 1, 0);
    for (size_t j = jlo; j < jhi; ++j) {
        std::swap(run, prev);
        run[0] = 0;
        for (size_t i = ilo; i < ihi; ++i) {
            const size_t k = i - ilo + 1;
            run[k] = (typed[i] == target[j]) ? prev[k - 1] + 1 : 0;
            if (run[k] > best.len) {
                best.len = run[k];
                best.i = i + 1 - run[k];
                best.j = j + 1 - run[k];
            }
        }
    }
    return best;
}

void pair_residue(std::string_view typed, size_t ilo, size_t ihi,
                  std::string_view target, size_t jlo, size_t jhi,
                  std::vector<EditPair>& out) {
    const size_t nu = ihi - ilo, nv = jhi - jlo;
    const size_t k = std::min(nu, nv);
    for (size_t p = 0; p < k; ++p) {
        out.push_back({typed[ilo + p], target[jlo + p], EditTag::Substitute});
    }
    for (size_t p = k; p < nu; ++p) {
        out.push_back({typed[ilo + p], std::nullopt, EditTag::Insert});
    }
    for (size_t p = k; p < nv; ++p) {
        out.push_back({std::nullopt, target[jlo + p], EditTag::Delete});
    }
}

void align_rec(std::string_view typed, size_t ilo, size_t ihi,
               std::string_view target, size_t jlo, size_t jhi,
               std::vector<EditPair>& out) {
    const MatchBlock blk = longest_match(typed, ilo, ihi, target, jlo, jhi);
    if (blk.len == 0) {
        pair_residue(typed, ilo, ihi, target, jlo, jhi, out);
        return;
    }
    align_rec(typed, ilo, blk.i, target, jlo, blk.j, out);
    for (size_t p = 0; p < blk.len; ++p) {
        out.push_back({typed[blk.i + p], target[blk.j + p], EditTag::Match});
    }
    align_rec(typed, blk.i + blk.len, ihi, target, blk.j + blk.len, jhi, out);
}

}  // namespace

std::vector<EditPair> align(std::string_view typed, std::string_view target) {
    std::vector<EditPair> out;
    out.reserve(std::max(typed.size(), target.size()));
    align_rec(typed, 0, typed.size(), target, 0, target.size(), out);
    return out;
}

int edit_count(const std::vector<EditPair>& pairs) {
    int n = 0;
    for (const auto& p : pairs) {
        if (p.tag != EditTag::Match) ++n;
    }
    return n;
}

void label_events(SentenceTrial& trial) {
    if (trial.events.size() != trial.typed_text.size()) {
        throw DataError("trial " + std::to_string(trial.sentence_id) + ": " +
                        std::to_string(trial.events.size()) + " events vs " +
                        std::to_string(trial.typed_text.size()) + " typed characters");
    }
    const auto pairs = align(trial.typed_text, trial.read_text);
    size_t ev = 0;
    for (const auto& p : pairs) {
        if (!p.pressed.has_value()) continue;  // deletion: no keystroke happened
        KeystrokeEvent& e = trial.events[ev++];
        if (e.pressed != *p.pressed) {
            throw DataError("event stream does not match typed_text at event " +
                            std::to_string(ev - 1));
        }
        e.target = p.intended;
        e.is_typo = !p.intended.has_value() || e.pressed != *p.intended;
    }
    if (ev != trial.events.size()) {
        throw DataError("alignment consumed fewer events than present");
    }
}

FilterReport filter_sentences(std::vector<SentenceTrial> trials, int max_edits) {
    FilterReport rep;
    const size_t total = trials.size();
    rep.kept.reserve(total);
    for (auto& t : trials) {
        const int edits = edit_count(align(t.typed_text, t.read_text));
        if (edits > max_edits) {
            ++rep.removed;
        } else {
            rep.kept.push_back(std::move(t));
        }
    }
    rep.removal_fraction = total == 0 ? 0.0 : static_cast<double>(rep.removed) / total;
    return rep;
}

}  // namespace keydec
