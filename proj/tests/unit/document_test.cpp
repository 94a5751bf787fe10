#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "b1f/onetwo.hpp"
#include "b1f/onethree.hpp"
#include "document.hpp"

namespace b1f::cli {
namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string golden_path(const std::string& name) { return std::string(B1F_GOLDEN_DIR) + "/" + name; }

std::string parse_error(std::string_view text) {
  try {
    parse(text);
  } catch (const DocumentError& e) {
    return e.what();
  }
  return "";
}

TEST(Document, RoundTripKeepsFactorOrder) {
  const auto f = onethree::base_factorisation(3, 14);
  const auto doc = to_document(f, {{"note", "x"}});
  const auto back = parse(emit(doc));
  EXPECT_EQ(back.order, 14);
  EXPECT_EQ(back.connection_set, (std::vector<int>{1, 3}));
  EXPECT_EQ(back.meta, doc.meta);
  EXPECT_EQ(to_factorisation(back), f);
  EXPECT_EQ(emit(back), emit(doc));
  EXPECT_EQ(to_factorisation(parse(emit_compact(doc))), f);
  EXPECT_EQ(emit_compact(doc).find('\n'), std::string::npos);
}

TEST(Document, EdgesSortedWithinFactor) {
  Document doc;
  doc.order = 4;
  doc.connection_set = {1, 2};
  doc.factors = {{{2, 3}, {1, 0}}, {{3, 1}, {0, 2}}, {{0, 3}, {1, 2}}};
  const std::string text = emit(doc);
  EXPECT_NE(text.find("[[0, 1], [2, 3]]"), std::string::npos) << text;
  EXPECT_NE(text.find("[[0, 2], [1, 3]]"), std::string::npos) << text;
  EXPECT_NO_THROW(to_factorisation(parse(text)));
}

TEST(Document, CanonicalFormIsLabellingIndependent) {
  const auto f = onetwo::construct_order8();
  std::vector<std::size_t> perm{2, 0, 3, 1};
  EXPECT_EQ(emit(to_document(f.permuted(perm).canonical())), emit(to_document(f.canonical())));
}

TEST(Document, ParseErrorsCarryPosition) {
  EXPECT_NE(parse_error("{\n  \"order\": 4,\n  \"connection_set\": [1, 2,]\n}").find("line 3"), std::string::npos);
  const auto msg = parse_error("{\"order\": @}");
  EXPECT_NE(msg.find("line 1, column 11"), std::string::npos) << msg;
  EXPECT_NE(parse_error("[1, 2]").find("must be an object"), std::string::npos);
}

TEST(Document, FieldErrors) {
  EXPECT_NE(parse_error("{\"connection_set\": [1], \"factors\": []}").find("missing field 'order'"), std::string::npos);
  EXPECT_NE(parse_error("{\"order\": 4, \"factors\": []}").find("missing field 'connection_set'"), std::string::npos);
  EXPECT_NE(parse_error("{\"order\": 4, \"connection_set\": [1, 2]}").find("missing field 'factors'"), std::string::npos);
  EXPECT_NE(parse_error("{\"order\": \"4\", \"connection_set\": [1, 2], \"factors\": []}").find("order: expected an integer"),
            std::string::npos);
  EXPECT_NE(parse_error("{\"order\": 4, \"connection_set\": [1, 2], \"factors\": [[[0, 1], [2]]]}").find("factors[0][1]"),
            std::string::npos);
  EXPECT_NE(parse_error("{\"order\": 4, \"connection_set\": [1, 2], \"factors\": [], \"meta\": 3}").find("meta"),
            std::string::npos);
}

TEST(Document, InvalidFactorisationIsAnError) {
  const auto doc = parse(R"({"order": 4, "connection_set": [1, 2], "factors": [[[0, 1], [2, 3]], [[0, 1], [2, 3]], [[0, 3], [1, 2]]]})");
  try {
    to_factorisation(doc);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OverlappingFactors);
  }
}

TEST(Document, ReadFileNamesThePath) {
  try {
    read_file("/nonexistent/doc.json");
    FAIL();
  } catch (const DocumentError& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/doc.json"), std::string::npos);
  }
}

TEST(Document, TableCsv) {
  TableRow r;
  r.order = 8;
  r.connection_set = {1, 2};
  r.cells = {{1, TableCell::None}, {2, TableCell::Found}, {3, TableCell::Unknown}, {6, TableCell::Infeasible}};
  EXPECT_EQ(table_csv({r}), "order,connection_set,m1,m2,m3,m6\n8,1;2,none,found,unknown,infeasible\n");
}

TEST(Golden, ExplicitFactorisations) {
  EXPECT_EQ(emit(to_document(onetwo::construct_order8())), slurp(golden_path("c12_order8.json")));
  for (auto [m, order] : onethree::supported_bases()) {
    const std::string name = "c13_m" + std::to_string(m) + "_order" + std::to_string(order) + ".json";
    const auto f = onethree::base_factorisation(m, order);
    const std::string text = slurp(golden_path(name));
    EXPECT_EQ(emit(to_document(f)), text) << name;
    EXPECT_EQ(to_factorisation(parse(text)), f) << name;
  }
}

}  // namespace
}  // namespace b1f::cli
