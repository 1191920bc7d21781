#include "qhx/simplicial.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace qhx {

const std::vector<SimplicialComplex::Face> SimplicialComplex::kEmptyDim = {
    SimplicialComplex::Face{}};

SimplicialComplex::SimplicialComplex() = default;

SimplicialComplex SimplicialComplex::from_faces(
    const std::vector<std::vector<std::string>>& faces) {
    SimplicialComplex c;
    std::vector<std::string> labels;
    for (const auto& f : faces)
        for (const auto& l : f) labels.push_back(l);
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    c.labels_ = std::move(labels);

    std::map<std::string, std::uint32_t> index;
    for (std::uint32_t i = 0; i < c.labels_.size(); ++i) index[c.labels_[i]] = i;

    std::deque<Face> pending;
    for (const auto& f : faces) {
        Face face;
        for (const auto& l : f) face.push_back(index.at(l));
        std::sort(face.begin(), face.end());
        if (std::adjacent_find(face.begin(), face.end()) != face.end())
            throw BadParams("face with a repeated label");
        if (face.empty()) continue;
        if (c.face_set_.insert(face).second) pending.push_back(std::move(face));
    }
    while (!pending.empty()) {
        Face face = std::move(pending.front());
        pending.pop_front();
        if (face.size() == 1) continue;
        for (std::size_t drop = 0; drop < face.size(); ++drop) {
            Face sub;
            sub.reserve(face.size() - 1);
            for (std::size_t i = 0; i < face.size(); ++i)
                if (i != drop) sub.push_back(face[i]);
            if (c.face_set_.insert(sub).second) pending.push_back(std::move(sub));
        }
    }

    int dim = -1;
    for (const Face& f : c.face_set_) dim = std::max(dim, static_cast<int>(f.size()) - 1);
    c.by_dim_.assign(dim + 1, {});
    for (const Face& f : c.face_set_) c.by_dim_[f.size() - 1].push_back(f);
    for (auto& bucket : c.by_dim_) std::sort(bucket.begin(), bucket.end());
    return c;
}

std::uint32_t SimplicialComplex::label_index(const std::string& l) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
    if (it == labels_.end() || *it != l) throw BadParams("unknown label '" + l + "'");
    return static_cast<std::uint32_t>(it - labels_.begin());
}

bool SimplicialComplex::has_label(const std::string& l) const {
    return std::binary_search(labels_.begin(), labels_.end(), l);
}

const std::vector<SimplicialComplex::Face>& SimplicialComplex::faces(int k) const {
    if (k == -1) return kEmptyDim;
    if (k < -1 || k > dim()) {
        static const std::vector<Face> none;
        return none;
    }
    return by_dim_[k];
}

std::size_t SimplicialComplex::face_count() const { return face_set_.size() + 1; }

std::vector<std::size_t> SimplicialComplex::f_vector() const {
    std::vector<std::size_t> f;
    for (const auto& bucket : by_dim_) f.push_back(bucket.size());
    return f;
}

bool SimplicialComplex::has_face(const Face& sorted_face) const {
    if (sorted_face.empty()) return true;
    return face_set_.count(sorted_face) > 0;
}

bool SimplicialComplex::has_face_labels(std::vector<std::string> face) const {
    Face f;
    for (const auto& l : face) {
        if (!has_label(l)) return false;
        f.push_back(label_index(l));
    }
    std::sort(f.begin(), f.end());
    return has_face(f);
}

std::vector<std::string> SimplicialComplex::face_labels(const Face& f) const {
    std::vector<std::string> out;
    out.reserve(f.size());
    for (auto i : f) out.push_back(labels_[i]);
    return out;
}

bool SimplicialComplex::operator==(const SimplicialComplex& other) const {
    return labels_ == other.labels_ && by_dim_ == other.by_dim_;
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b,
                       bool auto_prefix) {
    bool clash = false;
    for (const auto& l : a.labels())
        if (b.has_label(l)) {
            clash = true;
            break;
        }
    if (clash && !auto_prefix) throw LabelClash("joined complexes share labels");
    const std::string pa = clash ? "0." : "";
    const std::string pb = clash ? "1." : "";

    std::vector<std::vector<std::string>> faces;
    for (int ka = -1; ka <= a.dim(); ++ka)
        for (const auto& fa : a.faces(ka)) {
            std::vector<std::string> la;
            for (auto i : fa) la.push_back(pa + a.label(i));
            for (int kb = -1; kb <= b.dim(); ++kb)
                for (const auto& fb : b.faces(kb)) {
                    std::vector<std::string> f = la;
                    for (auto i : fb) f.push_back(pb + b.label(i));
                    faces.push_back(std::move(f));
                }
        }
    return SimplicialComplex::from_faces(faces);
}

bool canonical_iso_check(const SimplicialComplex& a, const SimplicialComplex& b,
                         const std::map<std::string, std::string>& label_bijection) {
    if (label_bijection.size() != a.labels().size())
        throw NotABijection("bijection is not total on the first complex's labels");
    std::unordered_set<std::string> image;
    for (const auto& l : a.labels()) {
        auto it = label_bijection.find(l);
        if (it == label_bijection.end())
            throw NotABijection("label '" + l + "' has no image");
        if (!b.has_label(it->second))
            throw NotABijection("image label '" + it->second + "' missing from target");
        if (!image.insert(it->second).second)
            throw NotABijection("bijection is not injective");
    }
    if (image.size() != b.labels().size())
        throw NotABijection("bijection is not onto the second complex's labels");

    if (a.face_count() != b.face_count()) return false;
    std::vector<std::uint32_t> translated(a.labels().size());
    for (std::size_t i = 0; i < a.labels().size(); ++i)
        translated[i] = b.label_index(label_bijection.at(a.label(i)));
    for (int k = 0; k <= a.dim(); ++k)
        for (const auto& f : a.faces(k)) {
            SimplicialComplex::Face img;
            img.reserve(f.size());
            for (auto i : f) img.push_back(translated[i]);
            std::sort(img.begin(), img.end());
            if (!b.has_face(img)) return false;
        }
    return true;
}

SimplicialMap make_simplicial_map(SimplicialComplex domain, SimplicialComplex codomain,
                                  std::map<std::string, std::string> vertex_map) {
    std::unordered_set<std::string> image;
    for (const auto& l : domain.labels()) {
        auto it = vertex_map.find(l);
        if (it == vertex_map.end())
            throw InvalidMorphism("vertex map not total on domain labels");
        if (!codomain.has_label(it->second))
            throw InvalidMorphism("vertex map leaves the codomain label set");
        if (!image.insert(it->second).second)
            throw InvalidMorphism("vertex map not injective");
    }
    for (int k = 0; k <= domain.dim(); ++k)
        for (const auto& f : domain.faces(k)) {
            SimplicialComplex::Face img;
            for (auto i : f) img.push_back(codomain.label_index(vertex_map.at(domain.label(i))));
            std::sort(img.begin(), img.end());
            if (!codomain.has_face(img))
                throw InvalidMorphism("image of a face is not a face");
        }
    return SimplicialMap{std::move(domain), std::move(codomain), std::move(vertex_map)};
}

std::string serialize_complex(const SimplicialComplex& c) {
    std::ostringstream out;
    out << "dim " << c.dim() << "\n";
    std::vector<std::vector<std::string>> faces;
    for (int k = 0; k <= c.dim(); ++k)
        for (const auto& f : c.faces(k)) faces.push_back(c.face_labels(f));
    std::sort(faces.begin(), faces.end());
    for (const auto& f : faces) {
        for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
        out << "\n";
    }
    return out.str();
}

SimplicialComplex parse_complex(std::istream& in) {
    std::string line;
    int lineno = 0;
    int declared_dim = 0;
    bool have_header = false;
    std::vector<std::vector<std::string>> faces;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = line.substr(0, line.find('#'));
        std::istringstream ss(body);
        std::vector<std::string> tok;
        std::string t;
        while (ss >> t) tok.push_back(t);
        if (tok.empty()) continue;
        if (!have_header) {
            if (tok.size() != 2 || tok[0] != "dim")
                throw ParseError(lineno, "expected 'dim <d>' header");
            declared_dim = std::stoi(tok[1]);
            have_header = true;
            continue;
        }
        faces.push_back(tok);
    }
    if (!have_header) throw ParseError(lineno == 0 ? 1 : lineno, "missing 'dim' header");
    SimplicialComplex c = SimplicialComplex::from_faces(faces);
    if (c.dim() != declared_dim)
        throw ParseError(lineno, "declared dim " + std::to_string(declared_dim) +
                                     " does not match faces (dim " + std::to_string(c.dim()) +
                                     ")");
    return c;
}

SimplicialComplex parse_complex(const std::string& text) {
    std::istringstream in(text);
    return parse_complex(in);
}

}  // namespace qhx
