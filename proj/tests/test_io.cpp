#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "cat/error.hpp"
#include "cat/io.hpp"
#include "cat/rng.hpp"

using namespace cat;

namespace {

Dataset parse(const std::string& text) {
    std::istringstream in(text);
    return read_csv(in);
}

}  // namespace

TEST_CASE("CSV reading") {
    const Dataset d = parse("a,b\n1,2\n3.5,-4e-3\n");
    CHECK(d.n() == 2);
    CHECK(d.p() == 2);
    CHECK(d.names() == std::vector<std::string>{"a", "b"});
    CHECK(d(1, 1) == -4e-3);

    CHECK(parse("\xEF\xBB\xBFx,y\n1,2\n").names().front() == "x");
    CHECK(parse("\"x\",y\r\n1,2\r\n").names() == std::vector<std::string>{"x", "y"});
    CHECK(parse("x,y\n1,2\n\n").n() == 1);
    CHECK(parse("x\n+1\n").column(0)[0] == 1.0);

    CHECK_THROWS_AS(parse(""), FormatError);
    CHECK_THROWS_AS(parse("1,2\n3,4\n"), FormatError);
    CHECK_THROWS_AS(parse("x,y\n1\n"), FormatError);
    CHECK_THROWS_AS(parse("x,y\n1,2,3\n"), FormatError);
    CHECK_THROWS_AS(parse("x,y\n1,abc\n"), FormatError);
    CHECK_THROWS_AS(parse("x,y\n"), FormatError);
    CHECK_THROWS_AS(parse("x,y\n1,nan\n"), NonFiniteInput);
    CHECK_THROWS_AS(parse("x,y\n1,inf\n"), NonFiniteInput);
}

TEST_CASE("CSV round trip is bit exact") {
    Rng rng(1);
    std::vector<double> values(300);
    for (double& v : values) v = rng.normal() * std::pow(10.0, rng.uniform(-20.0, 20.0));
    values[0] = std::numeric_limits<double>::denorm_min();
    values[1] = -0.0;
    const Dataset d(100, 3, values, {"u", "v", "w"});
    std::ostringstream out;
    write_csv(out, d);
    const Dataset back = parse(out.str());
    CHECK(back == d);
    CHECK(format_number(0.1) == "0.10000000000000001");
}

TEST_CASE("graph JSON") {
    const DirectedTree t = validate_tree(4, {{2, 0}, {2, 1}, {1, 3}});
    const std::string text = tree_json(t);
    const auto doc = nlohmann::json::parse(text);
    CHECK(doc["p"] == 4);
    CHECK(doc["root"] == 3);
    CHECK(doc["edges"] == nlohmann::json::parse("[[2,4],[3,1],[3,2]]"));
    CHECK(read_tree_json(text) == t);

    const Dag g(4, {{0, 1}, {2, 1}, {1, 3}});
    const std::string dtext = dag_json(g);
    CHECK_FALSE(nlohmann::json::parse(dtext).contains("root"));
    CHECK(read_dag_json(dtext) == g);
    CHECK(read_dag_json(text) == Dag::from_tree(t));

    CHECK_THROWS_AS(read_dag_json("{"), FormatError);
    CHECK_THROWS_AS(read_dag_json("{\"p\": 0, \"edges\": []}"), FormatError);
    CHECK_THROWS_AS(read_dag_json("{\"p\": 2, \"edges\": [[1, 3]]}"), FormatError);
    CHECK_THROWS_AS(read_dag_json("{\"p\": 2, \"edges\": [[1]]}"), FormatError);
    CHECK_THROWS_AS(read_dag_json("{\"edges\": []}"), FormatError);
    CHECK_THROWS_AS(read_tree_json("{\"p\": 3, \"edges\": [[1, 2]]}"), GraphError);
    CHECK_THROWS_AS(read_dag_json("{\"p\": 2, \"edges\": [[1, 2], [2, 1]]}"), CycleError);
}

TEST_CASE("weights CSV") {
    WeightMatrix w(3);
    w.set(0, 1, -0.25);
    w.set(2, 0, 1.0 / 3.0);
    w.forbid(1, 2);
    const std::string text = weights_csv(w);
    CHECK(text.find("2,3,") == std::string::npos);
    std::istringstream in(text);
    CHECK(read_weights_csv(in, 3) == w);

    std::istringstream bad("from,to,weight\n1,1,0\n");
    CHECK_THROWS_AS(read_weights_csv(bad, 3), FormatError);
    std::istringstream head("a,b,c\n");
    CHECK_THROWS_AS(read_weights_csv(head, 3), FormatError);
}

TEST_CASE("report JSON") {
    TestReport r;
    r.alpha = 0.05;
    r.n_eval = 10;
    r.result.s_restricted = std::numeric_limits<double>::infinity();
    r.result.s_upper = -1.5;
    r.result.reject = true;
    r.constraints = Substructure::make({{0, 1}}, {}, 0);
    const auto doc = nlohmann::json::parse(test_json(r));
    CHECK(doc["s_restricted"].is_null());
    CHECK(doc["psi"] == 1);
    CHECK(doc["constraints"]["required"] == nlohmann::json::parse("[[1,2]]"));
    CHECK(doc["constraints"]["root"] == 1);

    MetricReport m{2, 3, 0.5, 0.25};
    const auto md = nlohmann::json::parse(metrics_json(m));
    CHECK(md["shd"] == 2);
    CHECK(md["sid"] == 3);
    CHECK(md["ancestor_recall"] == 0.25);
}
