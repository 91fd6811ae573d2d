#include "ontomcq/term.hpp"

#include <cctype>

namespace ontomcq {

std::string iri_local_name(const std::string& iri) {
    const auto hash = iri.find_last_of('#');
    if (hash != std::string::npos) return iri.substr(hash + 1);
    const auto slash = iri.find_last_of('/');
    if (slash != std::string::npos) return iri.substr(slash + 1);
    const auto colon = iri.find_last_of(':');
    if (colon != std::string::npos) return iri.substr(colon + 1);
    return iri;
}

std::string humanize(const std::string& localName, bool capitalize) {
    std::string out;
    out.reserve(localName.size() + 4);
    for (std::size_t i = 0; i < localName.size(); ++i) {
        const char c = localName[i];
        if (c == '_' || c == '-') {
            if (!out.empty() && out.back() != ' ') out.push_back(' ');
            continue;
        }
        if (std::isupper(static_cast<unsigned char>(c)) && i > 0) {
            const char prev = localName[i - 1];
            const bool prevLower = std::islower(static_cast<unsigned char>(prev)) ||
                                   std::isdigit(static_cast<unsigned char>(prev));
            const bool nextLower = i + 1 < localName.size() &&
                                   std::islower(static_cast<unsigned char>(localName[i + 1]));
            // boundaries: aB and ABc (acronym followed by a word)
            if ((prevLower || (std::isupper(static_cast<unsigned char>(prev)) && nextLower)) &&
                !out.empty() && out.back() != ' ') {
                out.push_back(' ');
            }
        }
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    if (capitalize && !out.empty())
        out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
    return out;
}

}  // namespace ontomcq
