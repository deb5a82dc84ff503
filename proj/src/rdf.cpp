#include "ontoembed/rdf.hpp"

namespace ontoembed {

std::string_view iri_name(std::string_view iri) {
    const auto hash = iri.rfind('#');
    if (hash != std::string_view::npos && hash + 1 < iri.size()) {
        return iri.substr(hash + 1);
    }
    const auto slash = iri.rfind('/');
    if (slash != std::string_view::npos && slash + 1 < iri.size()) {
        return iri.substr(slash + 1);
    }
    return iri;
}

bool looks_like_iri(std::string_view token) {
    const auto colon = token.find(':');
    return colon != std::string_view::npos && colon > 0 &&
           token.find(' ') == std::string_view::npos;
}

namespace vocab {
bool is_builtin_annotation_property(std::string_view iri) {
    return iri == rdfs_label || iri == rdfs_comment || iri == rdfs_seealso ||
           iri == rdfs_isdefinedby;
}
}  // namespace vocab

std::string term_to_string(const Term& t) {
    if (const auto* iri = std::get_if<Iri>(&t)) return *iri;
    if (const auto* b = std::get_if<BlankNode>(&t)) return "_:" + b->label;
    return std::get<Literal>(t).lexical;
}

}  // namespace ontoembed
