#include <benchmark/benchmark.h>

#include <sstream>

#include "ontomcq/difficulty.hpp"
#include "ontomcq/ontology.hpp"
#include "ontomcq/pattern.hpp"
#include "ontomcq/pipeline.hpp"
#include "ontomcq/rng.hpp"

namespace {

using namespace ontomcq;

/// Layered synthetic graph: `movies` pivots typed into one of three
/// subclasses, each pointing at a director and an actor pool.
std::string synthetic_ttl(std::size_t movies) {
    std::ostringstream ttl;
    ttl << "@prefix ex: <http://bench/> .\n"
           "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
           "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
           "ex:Movie a owl:Class . ex:Person a owl:Class .\n"
           "ex:A a owl:Class ; rdfs:subClassOf ex:Movie .\n"
           "ex:B a owl:Class ; rdfs:subClassOf ex:Movie .\n"
           "ex:C a owl:Class ; rdfs:subClassOf ex:Movie .\n"
           "ex:by a owl:ObjectProperty ; rdfs:domain ex:Movie ; rdfs:range ex:Person .\n"
           "ex:with a owl:ObjectProperty ; rdfs:domain ex:Movie ; rdfs:range ex:Person .\n"
           "ex:year a owl:DatatypeProperty .\n";
    for (int i = 0; i < 8; ++i) ttl << "ex:p" << i << " a ex:Person .\n";
    const char* classes[3] = {"A", "B", "C"};
    Rng rng(7);
    for (std::size_t i = 0; i < movies; ++i) {
        ttl << "ex:m" << i << " a ex:" << classes[i % 3] << " ; ex:by ex:p" << rng.next_below(8)
            << " ; ex:with ex:p" << rng.next_below(8) << " ; ex:year \"" << 1990 + i % 30
            << "\" .\n";
        ttl << "ex:f" << i << " a ex:Person ; ex:likes ex:m" << i << " .\n";
    }
    return ttl.str();
}

const Ontology& bench_ontology() {
    static const Ontology o =
        Ontology::from_triples(parse_rdf(synthetic_ttl(40), RdfFormat::Turtle));
    return o;
}

void BM_LoadOntology(benchmark::State& state) {
    const std::string ttl = synthetic_ttl(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(Ontology::from_triples(parse_rdf(ttl, RdfFormat::Turtle)));
    }
}
BENCHMARK(BM_LoadOntology)->Arg(10)->Arg(40);

void BM_Satisfiers(benchmark::State& state) {
    const Ontology& o = bench_ontology();
    const Condition c = Condition::concept_membership(o.resolve("Movie"));
    for (auto _ : state) benchmark::DoNotOptimize(o.satisfiers(c));
}
BENCHMARK(BM_Satisfiers);

void BM_Connectivity(benchmark::State& state) {
    const Ontology& o = bench_ontology();
    const TermId p0 = o.resolve("p0");
    for (auto _ : state) benchmark::DoNotOptimize(o.connectivity(p0));
}
BENCHMARK(BM_Connectivity);

void BM_EnumerateStems(benchmark::State& state) {
    const Ontology& o = bench_ontology();
    const auto shapes = parse_patterns("p1,p2,p3");
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_stems(o, shapes));
}
BENCHMARK(BM_EnumerateStems);

void BM_GenerateBank(benchmark::State& state) {
    const Ontology& o = bench_ontology();
    GenerateOptions opts;
    opts.shapes = parse_patterns("type+out");
    opts.optionCount = 3;
    opts.seed = 99;
    opts.timestamp = 0;
    for (auto _ : state) benchmark::DoNotOptimize(generate_bank(o, opts));
}
BENCHMARK(BM_GenerateBank);

}  // namespace

int main(int argc, char** argv) {
    setenv("ONTOMCQ_LOG", "error", 0);  // keep warnings out of the timing output
    benchmark::Initialize(&argc, argv);
    benchmark::RunSpecifiedBenchmarks();
    return 0;
}
