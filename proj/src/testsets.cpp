#include "eraser/testsets.hpp"

#include <algorithm>
#include <optional>

#include "eraser/json_util.hpp"

namespace eraser {

std::vector<SpecialMembership> build_special(const std::vector<SpecialInputDoc>& docs) {
    std::vector<SpecialMembership> out;
    for (const SpecialInputDoc& doc : docs) {
        // sets iterate sorted, so the first qualifying pair is the smallest
        std::optional<SpecialMembership> witness;
        for (const Triple& pub : doc.locals.g_pub) {
            for (const Triple& pri : doc.locals.g_pri) {
                if (pub.tail() != pri.tail()) continue;
                if (pub.head() == pri.head() && pub.relation() == pri.relation()) continue;
                witness = SpecialMembership{doc.doc_id, pub, pri};
                break;
            }
            if (witness) break;
        }
        if (witness) out.push_back(std::move(*witness));
    }
    std::sort(out.begin(), out.end(),
              [](const SpecialMembership& a, const SpecialMembership& b) {
                  return a.doc_id < b.doc_id;
              });
    return out;
}

std::vector<InferMembership> build_infer(const std::vector<InferInput>& collections) {
    std::vector<InferMembership> out;
    for (const InferInput& col : collections) {
        KnowledgeGraph unprivate_global =
            remove_triples(col.global, col.private_graph.triple_set());

        std::vector<const InferInputDoc*> docs;
        for (const InferInputDoc& d : col.docs) docs.push_back(&d);
        std::sort(docs.begin(), docs.end(), [](const InferInputDoc* a, const InferInputDoc* b) {
            return a->doc_id < b->doc_id;
        });

        std::optional<InferMembership> witness;
        for (const InferInputDoc* doc : docs) {
            if (doc->g_pri.empty()) continue;
            KnowledgeGraph private_rest = remove_triples(col.private_graph, doc->g_pri);

            TripleSet g_unpri;  // the document's non-private triples
            for (const Triple& t : doc->g_all) {
                if (doc->g_pri.count(t) == 0) g_unpri.insert(t);
            }
            KnowledgeGraph other_docs_unprivate = remove_triples(unprivate_global, g_unpri);

            for (const Triple& t : doc->g_pri) {
                if (private_rest.connected(t.head(), t.tail())) continue;
                if (!other_docs_unprivate.connected(t.head(), t.tail())) continue;
                witness = InferMembership{col.collection_id, doc->doc_id, t};
                break;
            }
            if (witness) break;
        }
        if (witness) out.push_back(std::move(*witness));
    }
    std::sort(out.begin(), out.end(), [](const InferMembership& a, const InferMembership& b) {
        return a.collection_id < b.collection_id;
    });
    return out;
}

std::string special_to_jsonl(const std::vector<SpecialMembership>& members) {
    std::string out;
    for (const SpecialMembership& m : members) {
        json j{{"doc_id", m.doc_id},
               {"public_triple", triple_to_json(m.public_triple)},
               {"private_triple", triple_to_json(m.private_triple)}};
        out += j.dump() + "\n";
    }
    return out;
}

std::string infer_to_jsonl(const std::vector<InferMembership>& members) {
    std::string out;
    for (const InferMembership& m : members) {
        json j{{"collection_id", m.collection_id},
               {"witness_doc_id", m.witness_doc_id},
               {"private_triple", triple_to_json(m.private_triple)}};
        out += j.dump() + "\n";
    }
    return out;
}

}  // namespace eraser
