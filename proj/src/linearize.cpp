#include "eraser/linearize.hpp"

#include "eraser/error.hpp"

namespace eraser {

namespace {

void check_encodable(const std::string& field) {
    for (std::string_view marker : kAllMarkers) {
        if (field.find(marker) != std::string::npos) {
            throw UnencodableTripleError("triple field contains reserved marker '" +
                                         std::string(marker) + "': " + field);
        }
    }
}

std::string linearize(const TripleSet& triples, std::string_view subj, std::string_view rel,
                      std::string_view obj, std::string_view end) {
    std::string out;
    for (const Triple& t : triples) {
        check_encodable(t.head());
        check_encodable(t.relation());
        check_encodable(t.tail());
        out.append(subj);
        out.append(t.head());
        out.append(rel);
        out.append(t.relation());
        out.append(obj);
        out.append(t.tail());
        out.append(end);
    }
    return out;
}

// Position and identity of the first marker at or after `from`; npos if none.
std::pair<std::size_t, int> find_next_marker(std::string_view text, std::size_t from) {
    std::size_t best = std::string_view::npos;
    int which = -1;
    for (int i = 0; i < static_cast<int>(kAllMarkers.size()); ++i) {
        std::size_t pos = text.find(kAllMarkers[i], from);
        if (pos < best) {
            best = pos;
            which = i;
        }
    }
    return {best, which};
}

// Reads one field terminated by `expected`; returns the field and advances pos.
std::string expect_field(std::string_view text, std::size_t& pos, int expected) {
    auto [next, which] = find_next_marker(text, pos);
    if (next == std::string_view::npos) {
        throw MalformedLinearizationError(
            "missing marker '" + std::string(kAllMarkers[expected]) + "'", text.size());
    }
    if (which != expected) {
        throw MalformedLinearizationError(
            "expected marker '" + std::string(kAllMarkers[expected]) + "' but found '" +
                std::string(kAllMarkers[which]) + "'",
            next);
    }
    std::string field(text.substr(pos, next - pos));
    pos = next + kAllMarkers[which].size();
    return field;
}

std::string expect_nonblank_field(std::string_view text, std::size_t& pos, int expected) {
    std::size_t field_start = pos;
    std::string field = expect_field(text, pos, expected);
    if (field.find_first_not_of(" \t\r\n\f\v") == std::string::npos) {
        throw MalformedLinearizationError("blank field in block", field_start);
    }
    return field;
}

Triple parse_block(std::string_view text, std::size_t& pos, bool is_private) {
    const int base = is_private ? 0 : 4;  // marker indices within kAllMarkers
    std::string head = expect_nonblank_field(text, pos, base + 1);
    std::string relation = expect_nonblank_field(text, pos, base + 2);
    std::string tail = expect_nonblank_field(text, pos, base + 3);
    return Triple(head, relation, tail);
}

}  // namespace

std::string linearize_public(const TripleSet& triples) {
    return linearize(triples, kPublicSubj, kPublicRel, kPublicObj, kPublicEnd);
}

std::string linearize_private(const TripleSet& triples) {
    return linearize(triples, kPrivateSubj, kPrivateRel, kPrivateObj, kPrivateEnd);
}

std::string compose_rewriter_input(const std::string& doc_text, const TripleSet& private_triples,
                                   const TripleSet& public_triples) {
    std::string out = doc_text;
    out.append(kInputSeparator);
    out.append(linearize_private(private_triples));
    out.append(kInputSeparator);
    out.append(linearize_public(public_triples));
    return out;
}

std::pair<TripleSet, TripleSet> parse_linearized(std::string_view text) {
    TripleSet private_set, public_set;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto [next, which] = find_next_marker(text, pos);
        if (next != pos || next == std::string_view::npos) {
            throw MalformedLinearizationError("expected a block start marker", pos);
        }
        if (which == 0) {  // <rsubj>
            pos += kPrivateSubj.size();
            private_set.insert(parse_block(text, pos, /*is_private=*/true));
        } else if (which == 4) {  // <csubj>
            pos += kPublicSubj.size();
            public_set.insert(parse_block(text, pos, /*is_private=*/false));
        } else {
            throw MalformedLinearizationError(
                "block must start with '" + std::string(kPrivateSubj) + "' or '" +
                    std::string(kPublicSubj) + "'",
                pos);
        }
    }
    return {std::move(private_set), std::move(public_set)};
}

}  // namespace eraser
