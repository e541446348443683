#include "ontoscope/triples.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "ontoscope/error.hpp"
#include "ontoscope/normalize.hpp"

namespace ontoscope {

namespace {

std::size_t skip_spaces(std::string_view line, std::size_t pos) {
  while (pos < line.size() &&
         std::isspace(static_cast<unsigned char>(line[pos])) != 0) {
    ++pos;
  }
  return pos;
}

// Reads a `"..."` token at pos; returns the content and advances pos past the
// closing quote. npos-style failure reported via the bool.
bool read_quoted(std::string_view line, std::size_t& pos, std::string_view& out) {
  if (pos >= line.size() || line[pos] != '"') {
    return false;
  }
  std::size_t close = line.find('"', pos + 1);
  if (close == std::string_view::npos) {
    return false;
  }
  out = line.substr(pos + 1, close - pos - 1);
  pos = close + 1;
  return true;
}

}  // namespace

ConceptGraph import_triples(std::string_view triple_text, const ConceptGraph& graph,
                            std::string_view source_name) {
  ConceptGraph merged = graph;
  std::string source(source_name);

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= triple_text.size()) {
    std::size_t nl = triple_text.find('\n', pos);
    std::string_view line;
    if (nl == std::string_view::npos) {
      if (pos == triple_text.size()) {
        break;
      }
      line = triple_text.substr(pos);
      pos = triple_text.size() + 1;
    } else {
      line = triple_text.substr(pos, nl - pos);
      pos = nl + 1;
    }
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }
    std::size_t cursor = skip_spaces(line, 0);
    if (cursor >= line.size() || line[cursor] == '#') {
      continue;
    }

    std::string_view subject_raw;
    if (!read_quoted(line, cursor, subject_raw)) {
      throw Error(ErrorCode::MalformedTriple,
                  "expected `\"subject\" predicate \"object\"`", source, line_no);
    }
    cursor = skip_spaces(line, cursor);
    std::size_t pred_begin = cursor;
    while (cursor < line.size() &&
           std::isspace(static_cast<unsigned char>(line[cursor])) == 0) {
      ++cursor;
    }
    std::string_view predicate = line.substr(pred_begin, cursor - pred_begin);
    if (predicate.empty()) {
      throw Error(ErrorCode::MalformedTriple, "missing predicate", source, line_no);
    }
    cursor = skip_spaces(line, cursor);
    std::string_view object_raw;
    if (!read_quoted(line, cursor, object_raw)) {
      throw Error(ErrorCode::MalformedTriple, "missing quoted object", source,
                  line_no);
    }
    cursor = skip_spaces(line, cursor);
    if (cursor != line.size()) {
      throw Error(ErrorCode::MalformedTriple, "trailing text after triple",
                  source, line_no);
    }

    std::string pred_lower(predicate);
    std::transform(pred_lower.begin(), pred_lower.end(), pred_lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    std::optional<Relation> relation = relation_from_name(pred_lower);
    if (!relation) {
      throw Error(ErrorCode::UnknownPredicate,
                  "unknown predicate `" + std::string(predicate) + "`", source,
                  line_no);
    }

    std::string subject = normalize_term(subject_raw);
    std::string object = normalize_term(object_raw);
    if (subject.empty() || object.empty()) {
      throw Error(ErrorCode::MalformedTriple, "empty subject or object", source,
                  line_no);
    }
    NodeId from = merged.ensure_node(subject);
    NodeId to = merged.ensure_node(object);
    merged.add_edge(from, to, *relation, Provenance::imported());
  }
  return merged;
}

ConceptGraph import_triples_file(const std::filesystem::path& path,
                                 const ConceptGraph& graph) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open triple file", path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return import_triples(buf.str(), graph, path.string());
}

}  // namespace ontoscope
