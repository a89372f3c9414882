#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>

#include "eraser/triple.hpp"

namespace eraser {

// Special-token markers. The r-family wraps private triples, the c-family
// public ones. Fields may not contain any marker substring; colliding fields
// are rejected rather than escaped so the format stays byte-compatible with
// tokenizer-level special tokens.
inline constexpr std::string_view kPrivateSubj = "<rsubj>";
inline constexpr std::string_view kPrivateRel = "<rrel>";
inline constexpr std::string_view kPrivateObj = "<robj>";
inline constexpr std::string_view kPrivateEnd = "<re>";
inline constexpr std::string_view kPublicSubj = "<csubj>";
inline constexpr std::string_view kPublicRel = "<crel>";
inline constexpr std::string_view kPublicObj = "<cobj>";
inline constexpr std::string_view kPublicEnd = "<ce>";

inline constexpr std::array<std::string_view, 8> kAllMarkers = {
    kPrivateSubj, kPrivateRel, kPrivateObj, kPrivateEnd,
    kPublicSubj,  kPublicRel,  kPublicObj,  kPublicEnd,
};

// Sentinel line separating the document from the triple blocks in a composed
// rewriter input. No whitespace is emitted around markers themselves.
inline constexpr std::string_view kInputSeparator = "\n---\n";

// Per-triple encodings concatenated in canonical (lexicographic) order.
// Empty set encodes to the empty string. Throws UnencodableTripleError when
// a field contains a marker substring.
std::string linearize_public(const TripleSet& triples);
std::string linearize_private(const TripleSet& triples);

// doc_text + separator + private block + separator + public block.
std::string compose_rewriter_input(const std::string& doc_text, const TripleSet& private_triples,
                                   const TripleSet& public_triples);

// Exact inverse of the linearizers; accepts interleaved private/public
// blocks. Throws MalformedLinearizationError (with the byte offset of the
// first violation) on anything outside the block grammar.
std::pair<TripleSet, TripleSet> parse_linearized(std::string_view text);

}  // namespace eraser
