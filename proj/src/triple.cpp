#include "eraser/triple.hpp"

#include <cctype>

#include "eraser/error.hpp"

namespace eraser {

std::string normalize_entity(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    bool pending_space = false;
    for (unsigned char c : raw) {
        if (std::isspace(c)) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        out.push_back(static_cast<char>(std::tolower(c)));
    }
    if (out.empty()) {
        throw InvalidEntityError("entity is empty after normalization");
    }
    return out;
}

Triple::Triple(std::string_view head, std::string_view relation, std::string_view tail)
    : head_(normalize_entity(head)),
      relation_(normalize_entity(relation)),
      tail_(normalize_entity(tail)) {}

}  // namespace eraser
