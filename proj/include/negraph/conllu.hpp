#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "negraph/graph.hpp"

namespace negraph {

/// Parse CoNLL-U (10 tab-separated columns, blank line between sentences,
/// `#` comments, LF or CRLF). `# doc_id = X` groups sentences into
/// documents; sentences seen before any doc_id comment go to a document
/// named default_doc_id. `# sent_id = Y` names a sentence (default: its
/// 1-based ordinal within the document). Multiword-token ranges ("1-2")
/// and empty nodes ("1.1") are skipped.
///
/// Edges come from the enhanced DEPS column when it is not `_`, otherwise
/// from HEAD/DEPREL; edges to root (head 0) are dropped. POS is XPOS with
/// UPOS as fallback; lemmas are lowercased, `_` lemma falls back to the
/// lowercased form. Token spans are recovered from the `# text` comment
/// when present, else left as the (0,0) sentinel.
///
/// Throws ParseError (with line number) on malformed input.
std::vector<Document> parse_conllu(std::istream& in,
                                   const std::string& default_doc_id);

std::vector<Document> parse_conllu(const std::string& content,
                                   const std::string& default_doc_id);

// default_doc_id is the file's stem. Throws Error when unreadable.
std::vector<Document> parse_conllu_file(const std::string& path);

/// Serialize back to CoNLL-U. The full edge set goes into DEPS (so
/// multi-governor graphs survive), the first governor into HEAD/DEPREL;
/// re-parsing yields an identical vertex and edge set.
std::string to_conllu(const Document& doc);
std::string to_conllu(const std::vector<Document>& docs);

}  // namespace negraph
