#ifndef SEG2TREE_DOCUMENT_HPP
#define SEG2TREE_DOCUMENT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace seg2tree {

// Textual levels, ordered fine to coarse. Document is only ever a scope
// (upper bound), never a leaf granularity.
enum class Granularity { Edu = 0, Sentence = 1, Paragraph = 2, Document = 3 };

const char* granularity_name(Granularity g);
Granularity parse_granularity(const std::string& name);

struct EduRecord {
  std::string text;
  int sent = 0;  // 0-based sentence index
  int para = 0;  // 0-based paragraph index
};

// Immutable after construction. Ordered EDUs with monotone, contiguous
// sentence/paragraph assignments; the unit universe behind every tree.
class Document {
 public:
  Document(std::string id, std::vector<EduRecord> edus,
           std::optional<std::string> genre = std::nullopt);

  const std::string& id() const { return id_; }
  const std::optional<std::string>& genre() const { return genre_; }
  const std::vector<EduRecord>& edus() const { return edus_; }

  int edu_count() const { return static_cast<int>(edus_.size()); }
  int sentence_count() const { return static_cast<int>(sent_para_.size()); }
  int paragraph_count() const { return para_count_; }

  int unit_count(Granularity g) const;

  int sent_of_edu(int edu) const { return edus_[edu].sent; }
  int para_of_edu(int edu) const { return edus_[edu].para; }
  int para_of_sent(int sent) const { return sent_para_[sent]; }

  // Index of the `coarse` unit containing fine unit `index`.
  int parent_unit(Granularity fine, Granularity coarse, int index) const;

  // Inclusive [first, last] range of `fine` units inside coarse unit `index`.
  std::pair<int, int> unit_range(Granularity coarse, int coarse_index,
                                 Granularity fine) const;

 private:
  std::string id_;
  std::optional<std::string> genre_;
  std::vector<EduRecord> edus_;
  std::vector<int> sent_para_;                  // sentence -> paragraph
  std::vector<std::pair<int, int>> sent_edus_;  // sentence -> [first,last] EDU
  std::vector<std::pair<int, int>> para_edus_;  // paragraph -> [first,last] EDU
  std::vector<std::pair<int, int>> para_sents_; // paragraph -> [first,last] sentence
  int para_count_ = 0;
};

enum class DocFormat { JsonDoc, PlainSentences };

// JSON_DOC: {"id": str, "edus": [{"text", "sent", "para"}...], "genre"?: str}.
// PLAIN_SENTENCES: one sentence per line, blank line = paragraph break,
// one EDU per sentence; the document id is the file stem.
Document load_document(const std::string& path, DocFormat format);

// Loads every *.json (JSON_DOC) and *.txt (PLAIN_SENTENCES) under dir/docs/
// (or dir/ itself when no docs/ subdirectory exists), sorted by filename.
std::vector<Document> load_corpus_dir(const std::string& dir);

struct CorpusStats {
  long documents = 0;
  double paras_per_doc = 0.0;
  double sents_per_doc = 0.0;
  double edus_per_doc = 0.0;
  double edus_per_para = 0.0;
  double edus_per_sent = 0.0;
};

// Aggregate ratios over the corpus (total EDUs / total sentences, ...).
CorpusStats corpus_stats(const std::vector<Document>& docs);

}  // namespace seg2tree

#endif  // SEG2TREE_DOCUMENT_HPP
