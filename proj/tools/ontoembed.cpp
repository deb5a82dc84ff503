#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ontoembed/ntriples.hpp"
#include "ontoembed/pipeline.hpp"
#include "ontoembed/synth.hpp"
#include "ontoembed/vec.hpp"

namespace {

using namespace ontoembed;

void add_pipeline_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("-i,--input", cfg.input, "input N-Triples file");
    cmd->add_option("-o,--output-dir", cfg.output_dir, "artifact directory");
    cmd->add_option("--reasoning", cfg.reasoning, "entailment pre-pass: on|off")
        ->check(CLI::IsMember({"on", "off"}));
    cmd->add_option("--projection", cfg.projection, "graph strategy: mapping|rules|rules+r")
        ->check(CLI::IsMember({"mapping", "rules", "rules+r"}));
    cmd->add_option("--walker", cfg.walker, "walk generator: random|wl")
        ->check(CLI::IsMember({"random", "wl"}));
    cmd->add_option("--depth", cfg.depth, "walk depth (steps in the walk graph)");
    cmd->add_option("--walks-per-entity", cfg.walks_per_entity, "walks per start entity");
    cmd->add_option("--wl-size", cfg.wl_size, "maximum WL sub-graph size");
    cmd->add_option("--documents", cfg.documents, "training documents: s|sl|slrc|sltc")
        ->check(CLI::IsMember({"s", "sl", "slrc", "sltc"}));
    cmd->add_option("--dim", cfg.dim, "embedding dimension");
    cmd->add_option("--window", cfg.window, "skip-gram window");
    cmd->add_option("--min-count", cfg.min_count, "minimum token count");
    cmd->add_option("--epochs", cfg.epochs, "training epochs");
    cmd->add_option("--negatives", cfg.negatives, "negative samples per pair");
    cmd->add_option("--initial-lr", cfg.initial_lr, "initial learning rate");
    cmd->add_option("--final-lr", cfg.final_lr, "final learning rate");
    cmd->add_option("--subsample", cfg.subsample, "frequent-token subsampling threshold");
    cmd->add_option("--workers", cfg.workers, "training workers (1 = deterministic)");
    cmd->add_flag("--early-stop", cfg.early_stop, "stop when the epoch loss plateaus");
    cmd->add_option("--pretrained", cfg.pretrained, "pre-trained word vector file");
    cmd->add_option("--task", cfg.task, "prediction task: membership|subsumption")
        ->check(CLI::IsMember({"membership", "subsumption"}));
    cmd->add_option("--features", cfg.features, "entity features: iri|word|concat")
        ->check(CLI::IsMember({"iri", "word", "concat"}));
    cmd->add_option("--classifier", cfg.classifier, "classifier: lr|mlp")
        ->check(CLI::IsMember({"lr", "mlp"}));
    cmd->add_flag("--tfidf", cfg.tfidf, "IDF-weight the word vector average");
    cmd->add_option("--clf-lr", cfg.clf_lr, "classifier learning rate");
    cmd->add_option("--clf-epochs", cfg.clf_epochs, "classifier epochs");
    cmd->add_option("--clf-batch", cfg.clf_batch, "classifier mini-batch size");
    cmd->add_option("--clf-hidden", cfg.clf_hidden, "MLP hidden width (0 = auto)");
    cmd->add_option("--seed", cfg.seed, "global random seed");
    cmd->add_option("--split-seed", cfg.split_seed, "dataset split seed");
}

void print_result(const PipelineResult& result, PipelineStop stop) {
    for (const char* stage :
         {"convert", "project", "walk", "corpus", "train", "distances", "evaluate"}) {
        const auto it = result.stage_status.find(stage);
        if (it != result.stage_status.end()) {
            std::cout << "stage " << stage << ": " << it->second << '\n';
        }
    }
    for (const auto& [key, value] : result.stats) {
        std::cout << key << " = " << value << '\n';
    }
    if (stop == PipelineStop::Evaluate) {
        std::cout << '\n' << format_report(result.report) << '\n';
        std::cout << format_distance_report(result.distances);
    } else if (stop == PipelineStop::Distances) {
        std::cout << '\n' << format_distance_report(result.distances);
    }
}

int run_stage_command(const RunConfig& cfg, PipelineStop stop) {
    const PipelineResult result = run_pipeline(cfg, stop);
    print_result(result, stop);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"OWL ontology embedding toolkit: graph projection, random/WL "
                 "walks, skip-gram training and link-ranking evaluation"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path;
    std::string save_config_path;

    // load a config file first so command-line flags override it
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--config") {
            cfg = ontoembed::load_config(argv[i + 1]);
            config_path = argv[i + 1];
        }
    }

    struct StageCommand {
        const char* name;
        const char* help;
        ontoembed::PipelineStop stop;
    };
    const StageCommand stage_commands[] = {
        {"convert", "parse the ontology and write its canonical RDF form",
         ontoembed::PipelineStop::Convert},
        {"project", "build the projected graph and dump it as N-Triples",
         ontoembed::PipelineStop::Project},
        {"walk", "generate walk sentences", ontoembed::PipelineStop::Walk},
        {"corpus", "build the structure/lexical/combined documents",
         ontoembed::PipelineStop::Corpus},
        {"train", "train the skip-gram model and save the vectors",
         ontoembed::PipelineStop::Train},
        {"distances", "report positive/negative pair embedding distances",
         ontoembed::PipelineStop::Distances},
        {"evaluate", "train the classifier and report MRR / Hits@k",
         ontoembed::PipelineStop::Evaluate},
        {"pipeline", "run every stage end to end",
         ontoembed::PipelineStop::Evaluate},
    };
    for (const auto& sc : stage_commands) {
        CLI::App* cmd = app.add_subcommand(sc.name, sc.help);
        cmd->add_option("--config", config_path, "key=value config file (pre-loaded)");
        add_pipeline_options(cmd, cfg);
        const auto stop = sc.stop;
        cmd->callback([&cfg, &save_config_path, stop] {
            if (!save_config_path.empty()) ontoembed::save_config(cfg, save_config_path);
            run_stage_command(cfg, stop);
        });
        cmd->add_option("--save-config", save_config_path,
                        "write the effective configuration to this file");
    }

    // synthetic ontology generator
    ontoembed::SynthConfig synth_cfg;
    std::string synth_output = "synthetic.nt";
    CLI::App* synth_cmd =
        app.add_subcommand("synth", "generate the bundled synthetic benchmark ontology");
    synth_cmd->add_option("-o,--output", synth_output, "output N-Triples file");
    synth_cmd->add_option("--clusters", synth_cfg.clusters, "class clusters");
    synth_cmd->add_option("--mids", synth_cfg.mids_per_cluster, "mid classes per cluster");
    synth_cmd->add_option("--leaves", synth_cfg.leaves_per_mid, "leaf classes per mid");
    synth_cmd->add_option("--instances", synth_cfg.instances, "instance count");
    synth_cmd->add_option("--seed", synth_cfg.seed, "generator seed");
    synth_cmd->callback([&] {
        const ontoembed::Ontology onto = ontoembed::generate_synthetic(synth_cfg);
        ontoembed::write_ntriples_file(synth_output, ontoembed::serialize_mapping(onto));
        std::cout << "classes = " << onto.classes.size() << '\n'
                  << "instances = " << onto.instances.size() << '\n'
                  << "axioms = " << onto.axioms.size() << '\n'
                  << "wrote " << synth_output << '\n';
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
