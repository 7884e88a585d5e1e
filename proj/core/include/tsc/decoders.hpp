#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tsc/code.hpp"

namespace tsc {

struct TraceEvent {
    std::string stage;
    std::string detail;
};

struct DecodeOutcome {
    PauliOperator estimate;
    std::vector<TraceEvent> trace;
};

/* Every decoder returns an estimate whose syndrome equals the input syndrome
 * (verified on each call; a ContractViolation signals an internal bug). */
class Decoder {
  public:
    virtual ~Decoder() = default;
    virtual const SubsystemCode& code() const = 0;
    virtual std::string name() const = 0;
    DecodeOutcome decode(const SyndromeVector& s, bool with_trace = false) const;

  protected:
    virtual DecodeOutcome decode_impl(const SyndromeVector& s, bool with_trace) const = 0;
};

/* Restriction decoder for one error type on a 2D color code. For a chosen
 * lift color c0 with partners c1, c2: match the c0/c1 defects over the
 * c2-colored edges and the c0/c2 defects over the c1-colored edges, then
 * lift at every c0-face by pairing the marked boundary positions with arcs
 * of boundary vertices. Output is a vertex set reproducing the syndrome. */
class ColorCodeDecoder {
  public:
    /* lift_*: restriction decoding with the local ring lift at that color.
     * projection_*: a lighter two-stage projection in the style of decoding
     * color codes by projection onto surface codes - pair up the defects of
     * the other two colors through vertex arcs, then close the residual
     * syndrome of the named color over its same-color edges. best_of_three
     * runs the three ring lifts and keeps the lightest estimate. */
    enum class Strategy {
        lift_red,
        lift_green,
        lift_blue,
        best_of_three,
        projection_red,
        projection_green,
        projection_blue,
    };
    explicit ColorCodeDecoder(const SurfaceComplex& colex,
                              Strategy strategy = Strategy::best_of_three);
    /* face_syndrome is indexed by colex face id. */
    std::vector<std::size_t> decode(const std::vector<bool>& face_syndrome) const;
    const SurfaceComplex& colex() const { return colex_; }

  private:
    SurfaceComplex colex_;
    Strategy strategy_;
    struct Restriction {
        Color lift;            // c0
        bool projection = false;
        DecodingGraph ga, gb;  // ring lift: c2-/c1-colored edge arcs
        DecodingGraph pair_graph, closure_graph;  // projection variant
    };
    std::vector<Restriction> restrictions_;
    /* Few-defect syndromes (single errors, short cleanup chains) are also
     * decoded through the three ring lifts and the lightest estimate wins;
     * projection strategies keep their bulk behavior, where syndromes are
     * far larger than this cutoff. */
    std::vector<Restriction> small_syndrome_;
    static constexpr std::size_t kSmallSyndrome = 3;
    std::vector<std::size_t> decode_one(const Restriction& r,
                                        const std::vector<bool>& face_syndrome) const;
    std::vector<std::size_t> decode_projection(const Restriction& r,
                                               const std::vector<bool>& face_syndrome) const;
};

std::vector<std::size_t> decode_color_code_single_type(
    const SurfaceComplex& colex, const std::vector<bool>& face_syndrome,
    ColorCodeDecoder::Strategy strategy = ColorCodeDecoder::Strategy::best_of_three);

/* Matching-based estimate on a syndrome graph; returns the carrier set of
 * the matched shortest paths. */
std::vector<std::size_t> decode_surface_code(const DecodingGraph& graph,
                                             const std::vector<std::size_t>& defects);

class CubicProjectionDecoder final : public Decoder {
  public:
    explicit CubicProjectionDecoder(CubicCode code);
    const SubsystemCode& code() const override { return code_.code; }
    const CubicCode& family() const { return code_; }
    std::string name() const override { return "cubic-projection"; }

  protected:
    DecodeOutcome decode_impl(const SyndromeVector& s, bool with_trace) const override;

  private:
    CubicCode code_;
};

class CubicColoredMatchingDecoder final : public Decoder {
  public:
    explicit CubicColoredMatchingDecoder(CubicCode code);
    const SubsystemCode& code() const override { return code_.code; }
    const CubicCode& family() const { return code_; }
    std::string name() const override { return "cubic-colored-matching"; }

  protected:
    DecodeOutcome decode_impl(const SyndromeVector& s, bool with_trace) const override;

  private:
    CubicCode code_;
};

class TsccDecoder final : public Decoder {
  public:
    /* The default color-code stage is the projection variant closing on an
     * octagon color; it reproduces the published square-octagon threshold.
     * The ring-lift restriction strategies decode noticeably better (their
     * crossing sits near 2.4% on the same instances). */
    explicit TsccDecoder(TsccCode code,
                         ColorCodeDecoder::Strategy strategy =
                             ColorCodeDecoder::Strategy::projection_blue);
    const SubsystemCode& code() const override { return code_.code; }
    const TsccCode& family() const { return code_; }
    std::string name() const override { return "tscc"; }

  protected:
    DecodeOutcome decode_impl(const SyndromeVector& s, bool with_trace) const override;

  private:
    TsccCode code_;
    ColorCodeDecoder sub_;
};

class FiveSquaresDecoder final : public Decoder {
  public:
    explicit FiveSquaresDecoder(FiveSquaresCode code);
    const SubsystemCode& code() const override { return code_.code; }
    const FiveSquaresCode& family() const { return code_; }
    std::string name() const override { return "five-squares"; }

  protected:
    DecodeOutcome decode_impl(const SyndromeVector& s, bool with_trace) const override;

  private:
    FiveSquaresCode code_;
};

class SubsystemSurfaceDecoder final : public Decoder {
  public:
    explicit SubsystemSurfaceDecoder(SubsystemSurfaceCode code);
    const SubsystemCode& code() const override { return code_.code; }
    const SubsystemSurfaceCode& family() const { return code_; }
    std::string name() const override { return "subsystem-surface"; }

  protected:
    DecodeOutcome decode_impl(const SyndromeVector& s, bool with_trace) const override;

  private:
    SubsystemSurfaceCode code_;
};

}  // namespace tsc
