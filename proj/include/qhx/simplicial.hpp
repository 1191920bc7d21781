#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "qhx/errors.hpp"

namespace qhx {

/// Finite abstract simplicial complex over string labels, stored as the full
/// downward-closed face set. The empty face is always present; every label
/// occurs as a 0-face. The complex {∅} (dim −1) is the identity for joins;
/// the void complex is never produced.
class SimplicialComplex {
public:
    /// A face is a strictly increasing list of label indices.
    using Face = std::vector<std::uint32_t>;

    /// The {∅} complex.
    SimplicialComplex();

    /// Builds from generating faces (any order, labels may repeat across
    /// faces); the downward closure is completed. Labels are ordered
    /// lexicographically; only labels that occur in some face survive.
    static SimplicialComplex from_faces(const std::vector<std::vector<std::string>>& faces);

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::uint32_t i) const { return labels_[i]; }
    std::uint32_t label_index(const std::string& l) const;  // throws BadParams
    bool has_label(const std::string& l) const;

    int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
    /// Faces of dimension k in lexicographic order; k = −1 yields {∅}.
    const std::vector<Face>& faces(int k) const;
    /// Total number of faces including ∅.
    std::size_t face_count() const;
    /// Face counts per dimension 0..dim.
    std::vector<std::size_t> f_vector() const;

    bool has_face(const Face& sorted_face) const;
    bool has_face_labels(std::vector<std::string> face) const;

    std::vector<std::string> face_labels(const Face& f) const;

    bool operator==(const SimplicialComplex& other) const;

private:
    struct FaceHash {
        std::size_t operator()(const Face& f) const {
            std::size_t h = 1469598103934665603ull;
            for (auto x : f) h = (h ^ (x + 0x9e3779b9)) * 1099511628211ull;
            return h;
        }
    };

    std::vector<std::string> labels_;
    std::vector<std::vector<Face>> by_dim_;  // by_dim_[k] = faces of dimension k
    std::unordered_set<Face, FaceHash> face_set_;  // nonempty faces
    static const std::vector<Face> kEmptyDim;      // the single empty face
};

/// Join: faces are all unions σ ∪ τ. Labels must be disjoint; with
/// auto_prefix they are namespaced "0." / "1." on collision, otherwise a
/// collision throws LabelClash.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b,
                       bool auto_prefix = true);

/// Checks that the given label bijection maps the faces of `a` exactly onto
/// the faces of `b`. Throws NotABijection if the map is not a bijection
/// labels(a) → labels(b); never searches for an isomorphism.
bool canonical_iso_check(const SimplicialComplex& a, const SimplicialComplex& b,
                         const std::map<std::string, std::string>& label_bijection);

struct SimplicialMap {
    SimplicialComplex domain;
    SimplicialComplex codomain;
    std::map<std::string, std::string> vertex_map;  // injective on labels
};

/// Validates that vertex_map is injective, total on domain labels, and sends
/// every face to a face. Throws InvalidMorphism.
SimplicialMap make_simplicial_map(SimplicialComplex domain, SimplicialComplex codomain,
                                  std::map<std::string, std::string> vertex_map);

/// Line format: `dim <d>` header, then one nonempty face per line as
/// space-separated labels, faces sorted lexicographically as label tuples.
std::string serialize_complex(const SimplicialComplex& c);
SimplicialComplex parse_complex(std::istream& in);
SimplicialComplex parse_complex(const std::string& text);

}  // namespace qhx
