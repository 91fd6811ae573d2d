#pragma once

#include <array>

// Reference item-analysis dataset: 24 items administered to three 18-learner
// cohorts (low/medium/high trait). Per item: the observed correctness
// probability P per cohort, the reported difficulty alpha per cohort
// (computed at thetas -1.5 / 0 / 1.5), the reported actual difficulty level
// and the predicted level. Arrays are indexed low, medium, high.
// Five cells of the published table are internally inconsistent (the
// reported alpha does not equal the alpha recomputed from the reported P):
// i10/medium, i17/low, i22/low, i23/low and i24/low. Tests that need
// self-consistent data use the alpha column as the ground truth.

namespace ontomcq::testsupport {

struct StudyRow {
    const char* id;
    double p[3];           // P(low), P(medium), P(high)
    const char* alpha[3];  // alpha(low), alpha(medium), alpha(high); "+inf"/"-inf" possible
    const char* actual;    // "low" | "medium" | "high" | "none"
    const char* predicted;
};

inline constexpr std::array<StudyRow, 24> kStudyTable{{
    {"i1", {0.08, 0.12, 0.32}, {"0.94", "1.99", "2.25"}, "high", "high"},
    {"i2", {0.12, 0.32, 0.43}, {"0.49", "0.75", "1.78"}, "high", "high"},
    {"i3", {0.00, 0.22, 0.45}, {"+inf", "1.27", "1.70"}, "high", "high"},
    {"i4", {0.06, 0.42, 0.51}, {"1.25", "0.32", "1.46"}, "high", "high"},
    {"i5", {0.00, 0.27, 0.58}, {"+inf", "0.99", "1.18"}, "high", "high"},
    {"i6", {0.11, 0.30, 0.44}, {"0.59", "0.85", "1.74"}, "high", "high"},
    {"i7", {0.08, 0.17, 0.41}, {"0.94", "1.59", "1.86"}, "high", "high"},
    {"i8", {0.06, 0.41, 0.72}, {"1.25", "0.36", "0.56"}, "none", "high"},
    {"i9", {0.02, 0.51, 0.96}, {"2.39", "-0.04", "-1.68"}, "medium", "medium"},
    {"i10", {0.06, 0.22, 0.94}, {"1.25", "1.24", "-1.25"}, "medium", "medium"},
    {"i11", {0.00, 0.46, 1.00}, {"+inf", "0.16", "-inf"}, "medium", "medium"},
    {"i12", {0.11, 0.56, 0.90}, {"0.59", "-0.24", "-0.70"}, "medium", "medium"},
    {"i13", {0.08, 0.61, 1.00}, {"0.94", "-0.45", "-inf"}, "medium", "medium"},
    {"i14", {0.00, 0.44, 1.00}, {"+inf", "0.24", "-inf"}, "medium", "medium"},
    {"i15", {0.40, 0.89, 1.00}, {"-1.09", "-2.09", "-inf"}, "none", "medium"},
    {"i16", {0.06, 0.48, 1.00}, {"1.25", "0.08", "-inf"}, "medium", "medium"},
    {"i17", {0.38, 0.82, 1.00}, {"-0.84", "-1.52", "-inf"}, "none", "low"},
    {"i18", {0.16, 0.84, 1.00}, {"0.16", "-1.66", "-inf"}, "none", "low"},
    {"i19", {0.48, 1.00, 1.00}, {"-1.42", "-inf", "-inf"}, "low", "low"},
    {"i20", {0.50, 0.88, 0.96}, {"-1.50", "-1.99", "-1.68"}, "low", "low"},
    {"i21", {0.32, 0.92, 1.00}, {"-0.75", "-2.44", "-inf"}, "none", "low"},
    {"i22", {0.26, 0.96, 1.00}, {"-1.05", "-3.18", "-inf"}, "low", "low"},
    {"i23", {0.22, 0.77, 1.00}, {"-1.18", "-1.21", "-inf"}, "low", "low"},
    {"i24", {0.00, 0.88, 1.00}, {"-1.26", "-1.99", "-inf"}, "low", "low"},
}};

}  // namespace ontomcq::testsupport
