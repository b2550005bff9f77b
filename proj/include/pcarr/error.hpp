#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pcarr {

enum class Errc {
    BadFormat,
    NotInvolution,
    NotPermutation,
    Disconnected,
    EulerViolation,
    OddVertex,
    NotFourRegular,
    NotCocycle,
    DuplicateEdge,
    MissingCurves,
    NotDegreeFour,
    NonTransversalVertex,
    CurveNotClosed,
    TangentOrTriplePoint,
    NotIntersecting,
    NotAutomorphism,
    NotPentagon,
    NeighborNotTriangle,
    SharedOutwardEdge,
    EvenFace,
    IsolatedCurve,
    NotProper,
    NotThreeColors,
    SameSite,
    SiteNotOnBundle,
    NotCubic,
    BadIndex,
    Bridged,
    NoColoring,
    NoCubicPremedial,
    BridgedPremedial,
    NotFourChromatic,
    NoInvolution,
    AdjacentAntipodes,
    NotVertexCritical,
    InteriorNotThreeColorable,
    NotTwoDegenerate,
    NegativeWeight,
    UnknownFixture,
};

constexpr std::string_view errc_name(Errc e) {
    switch (e) {
    case Errc::BadFormat: return "BadFormat";
    case Errc::NotInvolution: return "NotInvolution";
    case Errc::NotPermutation: return "NotPermutation";
    case Errc::Disconnected: return "Disconnected";
    case Errc::EulerViolation: return "EulerViolation";
    case Errc::OddVertex: return "OddVertex";
    case Errc::NotFourRegular: return "NotFourRegular";
    case Errc::NotCocycle: return "NotCocycle";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::MissingCurves: return "MissingCurves";
    case Errc::NotDegreeFour: return "NotDegreeFour";
    case Errc::NonTransversalVertex: return "NonTransversalVertex";
    case Errc::CurveNotClosed: return "CurveNotClosed";
    case Errc::TangentOrTriplePoint: return "TangentOrTriplePoint";
    case Errc::NotIntersecting: return "NotIntersecting";
    case Errc::NotAutomorphism: return "NotAutomorphism";
    case Errc::NotPentagon: return "NotPentagon";
    case Errc::NeighborNotTriangle: return "NeighborNotTriangle";
    case Errc::SharedOutwardEdge: return "SharedOutwardEdge";
    case Errc::EvenFace: return "EvenFace";
    case Errc::IsolatedCurve: return "IsolatedCurve";
    case Errc::NotProper: return "NotProper";
    case Errc::NotThreeColors: return "NotThreeColors";
    case Errc::SameSite: return "SameSite";
    case Errc::SiteNotOnBundle: return "SiteNotOnBundle";
    case Errc::NotCubic: return "NotCubic";
    case Errc::BadIndex: return "BadIndex";
    case Errc::Bridged: return "Bridged";
    case Errc::NoColoring: return "NoColoring";
    case Errc::NoCubicPremedial: return "NoCubicPremedial";
    case Errc::BridgedPremedial: return "BridgedPremedial";
    case Errc::NotFourChromatic: return "NotFourChromatic";
    case Errc::NoInvolution: return "NoInvolution";
    case Errc::AdjacentAntipodes: return "AdjacentAntipodes";
    case Errc::NotVertexCritical: return "NotVertexCritical";
    case Errc::InteriorNotThreeColorable: return "InteriorNotThreeColorable";
    case Errc::NotTwoDegenerate: return "NotTwoDegenerate";
    case Errc::NegativeWeight: return "NegativeWeight";
    case Errc::UnknownFixture: return "UnknownFixture";
    }
    return "Unknown";
}

/// Every recoverable failure in the library is reported as an Error carrying
/// one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace pcarr
