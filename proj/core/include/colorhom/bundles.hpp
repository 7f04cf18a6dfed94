#pragma once

#include <string_view>
#include <variant>

#include "colorhom/bicharacter.hpp"
#include "colorhom/even_map.hpp"
#include "colorhom/graded_space.hpp"
#include "colorhom/multilinear.hpp"

namespace colorhom {

enum class BundleKind { NonAssociative, Akivis, Leibniz, NHLP, Dialgebra, Module };

std::string_view to_string(BundleKind kind);
/// Throws InputError on an unknown name.
BundleKind parse_bundle_kind(std::string_view text);

/// (A, mu, eps, alpha): a product with a twisting map.
struct NonAssocBundle {
    GradedSpace space;
    Bicharacter eps;
    MultilinearMap mu;
    EvenMap alpha;

    friend bool operator==(const NonAssocBundle&, const NonAssocBundle&) = default;
};

struct AkivisBundle {
    GradedSpace space;
    Bicharacter eps;
    MultilinearMap bracket;
    MultilinearMap ternary;
    EvenMap alpha;

    friend bool operator==(const AkivisBundle&, const AkivisBundle&) = default;
};

struct LeibnizBundle {
    GradedSpace space;
    Bicharacter eps;
    MultilinearMap bracket;
    EvenMap alpha;

    friend bool operator==(const LeibnizBundle&, const LeibnizBundle&) = default;
};

struct NHLPBundle {
    GradedSpace space;
    Bicharacter eps;
    MultilinearMap mu;
    MultilinearMap bracket;
    EvenMap alpha;

    friend bool operator==(const NHLPBundle&, const NHLPBundle&) = default;
};

/// Dialgebras are ungraded: the space must use the trivial group.
struct DialgebraBundle {
    GradedSpace space;
    MultilinearMap dashv;
    MultilinearMap vdash;
    EvenMap alpha;

    friend bool operator==(const DialgebraBundle&, const DialgebraBundle&) = default;
};

/// A module M over a color Hom-Leibniz algebra L. `left` has slots (L, M),
/// `right` has slots (M, L); both land in M.
struct ModuleBundle {
    LeibnizBundle algebra;
    GradedSpace module_space;
    MultilinearMap left;
    MultilinearMap right;
    EvenMap alphaM;

    friend bool operator==(const ModuleBundle&, const ModuleBundle&) = default;
};

using StructureBundle =
    std::variant<NonAssocBundle, AkivisBundle, LeibnizBundle, NHLPBundle, DialgebraBundle, ModuleBundle>;

BundleKind kind_of(const StructureBundle& bundle);

/// Shape, field, group and evenness checks. Throws InputError naming the
/// first problem; evenness problems cite the offending tuple.
void validate(const NonAssocBundle& b);
void validate(const AkivisBundle& b);
void validate(const LeibnizBundle& b);
void validate(const NHLPBundle& b);
void validate(const DialgebraBundle& b);
void validate(const ModuleBundle& b);
void validate(const StructureBundle& b);

} // namespace colorhom
