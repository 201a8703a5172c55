#include <gtest/gtest.h>

#include "pmc/error.hpp"
#include "pmc/spec_file.hpp"

using namespace pmc;

TEST(SpecFile, ParsesHeaderAndGenerators) {
    ModuleSpec s = parse_module_spec("# comment\nring n=3 N=20 p=3 rank=1\n\nx^2\nx*y\ny^2\n");
    EXPECT_EQ(s.params.n, 3);
    EXPECT_EQ(s.params.N, 20);
    EXPECT_EQ(s.params.p, 3u);
    EXPECT_TRUE(s.explicit_precision);
    EXPECT_EQ(s.generators, (std::vector<std::string>{"x^2", "x*y", "y^2"}));
    EXPECT_EQ(indices(build_module(s)), (IndexVector{1, 2}));
}

TEST(SpecFile, DefaultPrecision) {
    ModuleSpec s = parse_module_spec("ring n=3 p=2\nx^2\nx*y\ny^2\n");
    EXPECT_FALSE(s.explicit_precision);
    EXPECT_EQ(s.params.N, min_precision(3, 2));
    EXPECT_EQ(parse_module_spec("ring n=3 p=2\nx^2\n", 25).params.N, 25);
    ModuleSpec one = parse_module_spec("ring n=4 p=2\n1\n");
    EXPECT_EQ(indices(build_module(one)), (IndexVector{0, 0, 0}));
}

TEST(SpecFile, Errors) {
    EXPECT_THROW(parse_module_spec(""), ParseError);
    EXPECT_THROW(parse_module_spec("ring p=2\nx\n"), ParseError);
    EXPECT_THROW(parse_module_spec("ring n=3 p=2 q=1\nx\n"), ParseError);
    EXPECT_THROW(parse_module_spec("ring n=3 n=3 p=2\nx\n"), ParseError);
    EXPECT_THROW(parse_module_spec("ring n=2 p=2\nx^2\ny^2\n"), ParseError);
    EXPECT_THROW(parse_module_spec("ring n=3 p=2 rank=2\nx\n"), ParseError);
    EXPECT_THROW(parse_module_spec("module n=3 p=2\nx\n"), ParseError);
    EXPECT_THROW(read_module_spec("/nonexistent/file.spec"), ParseError);
}
