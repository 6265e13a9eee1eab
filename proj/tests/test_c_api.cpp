// Links only the shared library and its C header.

#include <gtest/gtest.h>

#include <cstring>
#include <string>

#include "nilcortex/nilcortex.h"

namespace {

struct Str {
  char* p = nullptr;
  ~Str() { nc_string_free(p); }
  std::string s() const { return p ? p : ""; }
};

}  // namespace

TEST(CApi, StatusNames) {
  EXPECT_STREQ(nc_status_name(NC_OK), "ok");
  EXPECT_NE(std::strlen(nc_status_name(NC_ERR_DEGENERATE_STRATUM)), 0u);
}

TEST(CApi, GdAlgebraLifecycle) {
  nc_algebra* alg = nullptr;
  ASSERT_EQ(nc_algebra_gd(3, &alg), NC_OK);
  EXPECT_EQ(nc_algebra_dim(alg), 12u);
  int jacobi = 0, cls = 0;
  size_t center_dim = 0;
  ASSERT_EQ(nc_algebra_validate(alg, &jacobi, &cls, &center_dim), NC_OK);
  EXPECT_EQ(jacobi, 1);
  EXPECT_EQ(cls, 2);
  EXPECT_EQ(center_dim, 3u);

  Str text;
  ASSERT_EQ(nc_algebra_serialize(alg, &text.p), NC_OK);
  nc_algebra* back = nullptr;
  ASSERT_EQ(nc_algebra_parse(text.p, &back), NC_OK);
  EXPECT_EQ(nc_algebra_dim(back), 12u);
  nc_algebra_free(back);
  nc_algebra_free(alg);
  nc_algebra_free(nullptr);
}

TEST(CApi, OrbitAndJumps) {
  nc_algebra* alg = nullptr;
  ASSERT_EQ(nc_algebra_gd(2, &alg), NC_OK);
  size_t dim = 0;
  ASSERT_EQ(nc_orbit_dimension(alg, "1,0,0,0,0,0,0,0", &dim), NC_OK);
  EXPECT_EQ(dim, 4u);
  size_t pos[8] = {};
  size_t count = 0;
  ASSERT_EQ(nc_jump_indices(alg, "3,1/2,1,-2,7,1,0,5", pos, 8, &count), NC_OK);
  ASSERT_EQ(count, 4u);
  EXPECT_EQ(pos[0], 3u);
  EXPECT_EQ(pos[3], 8u);
  // short buffer still reports the full count
  ASSERT_EQ(nc_jump_indices(alg, "3,1/2,1,-2,7,1,0,5", pos, 1, &count), NC_OK);
  EXPECT_EQ(count, 4u);

  Str moved;
  ASSERT_EQ(nc_coadjoint_exp(alg, "0,0,0,0,0,0,3/2,0", "1,0,7,0,0,0,0,0", &moved.p), NC_OK);
  EXPECT_EQ(moved.s(), "1,0,11/2,0,0,0,0,0");
  nc_algebra_free(alg);
}

TEST(CApi, GdQueries) {
  int member = -1;
  ASSERT_EQ(nc_cortex_member_gd(2, "0,0,1,2,3,6,0,0", &member), NC_OK);
  EXPECT_EQ(member, 1);
  ASSERT_EQ(nc_icor_member_gd(2, "0,0,1,0,1,1,0,0", &member), NC_OK);
  EXPECT_EQ(member, 1);
  ASSERT_EQ(nc_cortex_member_gd(2, "0,0,1,0,1,1,0,0", &member), NC_OK);
  EXPECT_EQ(member, 0);

  Str p;
  ASSERT_EQ(nc_cross_section_gd(2, "1,2,1,1,1,1,5,7", &p.p), NC_OK);
  EXPECT_EQ(p.s(), "1,2,0,-1,0,-1,0,0");
  Str q;
  ASSERT_EQ(nc_cortex_poly_gd(2, &q.p), NC_OK);
  EXPECT_EQ(q.s(), "-y1*y4 + y2*y3");
}

TEST(CApi, ErrorCodes) {
  nc_algebra* alg = nullptr;
  EXPECT_EQ(nc_algebra_parse("{not json", &alg), NC_ERR_PARSE);
  EXPECT_EQ(alg, nullptr);
  EXPECT_NE(std::strlen(nc_last_error()), 0u);
  EXPECT_EQ(nc_algebra_load("/nonexistent/file.json", &alg), NC_ERR_IO);
  EXPECT_EQ(nc_algebra_gd(1, &alg), NC_ERR_ARGUMENT);

  Str out;
  EXPECT_EQ(nc_cross_section_gd(2, "0,2,1,1,1,1,5,7", &out.p), NC_ERR_OUT_OF_LAYER);
  EXPECT_EQ(nc_cross_section_gd(2, "1,2", &out.p), NC_ERR_DIMENSION);
  EXPECT_EQ(nc_cross_section_gd(2, "1,2,x,1,1,1,5,7", &out.p), NC_ERR_PARSE);
  EXPECT_EQ(nc_report_witness(2, "0,0,1,0,0,1,0,0", "1/10", NC_FORMAT_TEXT, &out.p), NC_ERR_NOT_ON_VARIETY);
  EXPECT_EQ(nc_report_witness(2, "0,0,0,3,0,7,1,1", "1/10", NC_FORMAT_TEXT, &out.p), NC_ERR_DEGENERATE_STRATUM);
  EXPECT_EQ(nc_report_witness(2, "0,0,1,2,3,6,0,0", "0", NC_FORMAT_TEXT, &out.p), NC_ERR_ARGUMENT);

  ASSERT_EQ(nc_algebra_parse(R"({"dim": 4, "basis": ["A","B","C","D"], "brackets": [
      {"i": 1, "j": 2, "coeffs": {"3": "1"}}, {"i": 1, "j": 3, "coeffs": {"4": "1"}}]})",
                             &alg),
            NC_OK);
  EXPECT_EQ(nc_coadjoint_exp(alg, "1,0,0,0", "0,0,0,1", &out.p), NC_ERR_CLASS);
  EXPECT_EQ(nc_report_classify(alg, 5, 0, NC_FORMAT_TEXT, &out.p, nullptr), NC_ERR_CLASS);
  nc_algebra_free(alg);
  EXPECT_EQ(nc_orbit_dimension(nullptr, "1", nullptr), NC_ERR_ARGUMENT);
}

TEST(CApi, ReportsAndCloud) {
  Str text;
  int truth = -1;
  ASSERT_EQ(nc_report_cortex_test(2, "0,0,1,2,3,6,0,0", NC_FORMAT_RECORD, &text.p, &truth), NC_OK);
  EXPECT_EQ(truth, 1);
  EXPECT_NE(text.s().find("\"command\""), std::string::npos);

  nc_algebra* h = nullptr;
  ASSERT_EQ(nc_algebra_heisenberg(&h), NC_OK);
  nc_cloud_options o;
  nc_cloud_options_default(&o);
  o.samples = 500;
  Str csv;
  size_t points = 0;
  ASSERT_EQ(nc_cloud_csv(h, &o, &csv.p, &points), NC_OK);
  EXPECT_GT(points, 0u);
  nc_algebra_free(h);
}
