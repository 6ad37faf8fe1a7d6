#pragma once
// Command-line front end: dataset generation, training, evaluation,
// ensembling, gradient checking, and the preset registry.
//
// Exit codes: 0 success, 2 usage, 3 missing/unreadable file, 4 file-format
// violation, 5 bad configuration, 6 numeric failure, 1 internal error.
// Failures print a single line to stderr: "error: <category>: <message>".

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rrank/dataset.hpp"
#include "rrank/ensemble.hpp"
#include "rrank/io.hpp"
#include "rrank/metrics.hpp"
#include "rrank/presets.hpp"
#include "rrank/relevance.hpp"
#include "rrank/synthdata.hpp"
#include "rrank/trainer.hpp"

namespace rrank::cli {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string read_text_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << text;
    if (!out) throw IoError("write failed: " + path.string());
}

inline ordered_json parse_json_file(const fs::path& path) {
    const std::string text = read_text_file(path);
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

inline void reject_unknown_keys(const ordered_json& obj,
                                const std::vector<std::string>& allowed,
                                const std::string& context) {
    if (!obj.is_object()) throw ConfigError(context + ": expected a JSON object");
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const auto& key : allowed)
            if (item.key() == key) { known = true; break; }
        if (!known) throw ConfigError(context + ": unknown key '" + item.key() + "'");
    }
}

template <typename T>
T get_field(const ordered_json& obj, const std::string& key, T fallback,
            const std::string& context) {
    if (!obj.contains(key)) return fallback;
    try {
        return obj.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ConfigError(context + ": key '" + key + "' has the wrong type");
    }
}

}  // namespace detail

inline const char* to_string(LossVariant v) {
    switch (v) {
        case LossVariant::FixedMargin: return "fixed_margin";
        case LossVariant::RelevanceMargin: return "relevance_margin";
        case LossVariant::Ranp: return "ranp";
    }
    return "fixed_margin";
}

inline LossVariant loss_variant_from_string(const std::string& s) {
    if (s == "fixed_margin") return LossVariant::FixedMargin;
    if (s == "relevance_margin") return LossVariant::RelevanceMargin;
    if (s == "ranp") return LossVariant::Ranp;
    throw ConfigError("unknown loss variant '" + s +
                      "' (expected fixed_margin|relevance_margin|ranp)");
}

inline ordered_json metric_report_json(const MetricReport& r, bool percent = false) {
    const double f = percent ? 100.0 : 1.0;
    ordered_json j;
    j["ndcg_v2t"] = f * r.ndcg_v2t;
    j["ndcg_t2v"] = f * r.ndcg_t2v;
    j["ndcg_avg"] = f * r.ndcg_avg;
    j["map_v2t"] = f * r.map_v2t;
    j["map_t2v"] = f * r.map_t2v;
    j["map_avg"] = f * r.map_avg;
    return j;
}

inline ordered_json train_config_json(const TrainConfig& c) {
    ordered_json j;
    j["loss"] = {{"variant", to_string(c.loss.variant)},
                 {"margin", c.loss.margin},
                 {"margin_pos", c.loss.margin_pos},
                 {"tau", c.loss.tau},
                 {"ranp_relevance_margin", c.loss.ranp_relevance_margin}};
    j["direction_weights"] = {{"t2v", c.directions.t2v},
                              {"v2t", c.directions.v2t},
                              {"v2v", c.directions.v2v},
                              {"t2t", c.directions.t2t}};
    if (std::holds_alternative<SgdConfig>(c.optimizer)) {
        const auto& o = std::get<SgdConfig>(c.optimizer);
        j["optimizer"] = {{"type", "sgd"}, {"lr", o.lr}, {"momentum", o.momentum}};
    } else {
        const auto& o = std::get<AdamConfig>(c.optimizer);
        j["optimizer"] = {{"type", "adam"}, {"lr", o.lr}, {"beta1", o.beta1},
                          {"beta2", o.beta2}, {"eps", o.eps}};
    }
    j["batch_size"] = c.batch_size;
    j["epochs"] = c.epochs;
    j["seed"] = c.seed;
    j["relevance_mode"] = rrank::to_string(c.relevance_mode);
    j["embedding_dim"] = c.embedding_dim;
    j["use_bias"] = c.use_bias;
    j["select_best"] = c.select_best;
    j["val_fraction"] = c.val_fraction;
    j["split_seed"] = c.split_seed;
    j["map_threshold"] = c.map_threshold;
    return j;
}

// Applies a JSON document on top of a base config. Unknown keys anywhere are
// rejected. A "preset" key replaces the base before the other keys apply.
inline TrainConfig train_config_from_json(const ordered_json& j, TrainConfig base,
                                          bool preset_flag_given = false) {
    detail::reject_unknown_keys(
        j,
        {"preset", "loss", "direction_weights", "optimizer", "batch_size", "epochs", "seed",
         "relevance_mode", "embedding_dim", "use_bias", "select_best", "val_fraction",
         "split_seed", "map_threshold"},
        "train config");
    if (j.contains("preset")) {
        if (preset_flag_given)
            throw ConfigError("preset given both on the command line and in the config file");
        base = preset_by_name(detail::get_field<std::string>(j, "preset", "", "train config"))
                   .config;
    }
    TrainConfig cfg = base;

    if (j.contains("loss")) {
        const auto& jl = j.at("loss");
        detail::reject_unknown_keys(
            jl, {"variant", "margin", "margin_pos", "tau", "ranp_relevance_margin"},
            "train config: loss");
        if (jl.contains("variant"))
            cfg.loss.variant = loss_variant_from_string(
                detail::get_field<std::string>(jl, "variant", "", "loss"));
        cfg.loss.margin = detail::get_field<double>(jl, "margin", cfg.loss.margin, "loss");
        cfg.loss.margin_pos =
            detail::get_field<double>(jl, "margin_pos", cfg.loss.margin_pos, "loss");
        cfg.loss.tau = detail::get_field<double>(jl, "tau", cfg.loss.tau, "loss");
        cfg.loss.ranp_relevance_margin = detail::get_field<bool>(
            jl, "ranp_relevance_margin", cfg.loss.ranp_relevance_margin, "loss");
    }
    if (j.contains("direction_weights")) {
        const auto& jw = j.at("direction_weights");
        detail::reject_unknown_keys(jw, {"t2v", "v2t", "v2v", "t2t"},
                                    "train config: direction_weights");
        cfg.directions.t2v = detail::get_field<double>(jw, "t2v", cfg.directions.t2v, "weights");
        cfg.directions.v2t = detail::get_field<double>(jw, "v2t", cfg.directions.v2t, "weights");
        cfg.directions.v2v = detail::get_field<double>(jw, "v2v", cfg.directions.v2v, "weights");
        cfg.directions.t2t = detail::get_field<double>(jw, "t2t", cfg.directions.t2t, "weights");
    }
    if (j.contains("optimizer")) {
        const auto& jo = j.at("optimizer");
        const std::string type = detail::get_field<std::string>(jo, "type", "", "optimizer");
        if (type == "sgd") {
            detail::reject_unknown_keys(jo, {"type", "lr", "momentum"},
                                        "train config: optimizer");
            SgdConfig o;
            o.lr = detail::get_field<double>(jo, "lr", o.lr, "optimizer");
            o.momentum = detail::get_field<double>(jo, "momentum", o.momentum, "optimizer");
            cfg.optimizer = o;
        } else if (type == "adam") {
            detail::reject_unknown_keys(jo, {"type", "lr", "beta1", "beta2", "eps"},
                                        "train config: optimizer");
            AdamConfig o;
            o.lr = detail::get_field<double>(jo, "lr", o.lr, "optimizer");
            o.beta1 = detail::get_field<double>(jo, "beta1", o.beta1, "optimizer");
            o.beta2 = detail::get_field<double>(jo, "beta2", o.beta2, "optimizer");
            o.eps = detail::get_field<double>(jo, "eps", o.eps, "optimizer");
            cfg.optimizer = o;
        } else {
            throw ConfigError("optimizer type must be 'sgd' or 'adam'");
        }
    }
    cfg.batch_size = detail::get_field<int>(j, "batch_size", cfg.batch_size, "train config");
    cfg.epochs = detail::get_field<int>(j, "epochs", cfg.epochs, "train config");
    cfg.seed = detail::get_field<std::uint64_t>(j, "seed", cfg.seed, "train config");
    if (j.contains("relevance_mode")) {
        try {
            cfg.relevance_mode = relevance_mode_from_string(
                detail::get_field<std::string>(j, "relevance_mode", "", "train config"));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }
    cfg.embedding_dim =
        detail::get_field<int>(j, "embedding_dim", cfg.embedding_dim, "train config");
    cfg.use_bias = detail::get_field<bool>(j, "use_bias", cfg.use_bias, "train config");
    cfg.select_best =
        detail::get_field<bool>(j, "select_best", cfg.select_best, "train config");
    cfg.val_fraction =
        detail::get_field<double>(j, "val_fraction", cfg.val_fraction, "train config");
    cfg.split_seed =
        detail::get_field<std::uint64_t>(j, "split_seed", cfg.split_seed, "train config");
    cfg.map_threshold =
        detail::get_field<double>(j, "map_threshold", cfg.map_threshold, "train config");
    try {
        validate(cfg);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return cfg;
}

inline SynthConfig synth_config_from_json(const ordered_json& j) {
    detail::reject_unknown_keys(j,
                                {"n_items", "n_verb_classes", "n_noun_classes",
                                 "nouns_per_item", "d_video", "d_text", "noise_sigma", "seed"},
                                "synth config");
    SynthConfig cfg;
    cfg.n_items = detail::get_field<int>(j, "n_items", cfg.n_items, "synth config");
    cfg.n_verb_classes =
        detail::get_field<int>(j, "n_verb_classes", cfg.n_verb_classes, "synth config");
    cfg.n_noun_classes =
        detail::get_field<int>(j, "n_noun_classes", cfg.n_noun_classes, "synth config");
    cfg.nouns_per_item =
        detail::get_field<int>(j, "nouns_per_item", cfg.nouns_per_item, "synth config");
    cfg.d_video = detail::get_field<int>(j, "d_video", cfg.d_video, "synth config");
    cfg.d_text = detail::get_field<int>(j, "d_text", cfg.d_text, "synth config");
    cfg.noise_sigma =
        detail::get_field<double>(j, "noise_sigma", cfg.noise_sigma, "synth config");
    cfg.seed = detail::get_field<std::uint64_t>(j, "seed", cfg.seed, "synth config");
    try {
        validate(cfg);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return cfg;
}

namespace detail {

inline Dataset load_dataset_dir(const fs::path& dir) {
    Dataset ds;
    ds.videos = read_fmat(dir / "videos.fmat");
    ds.texts = read_fmat(dir / "texts.fmat");
    ds.annotations = parse_annotations(read_text_file(dir / "annotations.csv"));
    if (ds.videos.rows() != ds.texts.rows() ||
        ds.videos.rows() != static_cast<Eigen::Index>(ds.annotations.size()))
        throw FormatError(dir.string() + ": videos.fmat (" + std::to_string(ds.videos.rows()) +
                          " rows), texts.fmat (" + std::to_string(ds.texts.rows()) +
                          " rows) and annotations.csv (" +
                          std::to_string(ds.annotations.size()) + " rows) disagree");
    return ds;
}

inline std::string history_jsonl(const TrainHistory& history) {
    std::string out;
    for (const EpochStats& e : history.epochs) {
        ordered_json j;
        j["epoch"] = e.epoch;
        j["mean_loss"] = e.mean_loss;
        j["skipped_anchors"] = e.skipped_anchors;
        if (e.validation) j["metrics"] = metric_report_json(*e.validation);
        out += j.dump();
        out += '\n';
    }
    return out;
}

inline int run_gen(const std::string& config_path, const std::string& out_dir,
                   bool seed_given, std::uint64_t seed) {
    SynthConfig cfg;
    if (!config_path.empty()) cfg = synth_config_from_json(parse_json_file(config_path));
    if (seed_given) cfg.seed = seed;
    const Dataset ds = generate_dataset(cfg);
    fs::create_directories(out_dir);
    write_fmat(fs::path(out_dir) / "videos.fmat", ds.videos);
    write_fmat(fs::path(out_dir) / "texts.fmat", ds.texts);
    write_text_file(fs::path(out_dir) / "annotations.csv",
                    format_annotations_csv(ds.annotations));
    ordered_json j;
    j["items"] = cfg.n_items;
    j["out"] = out_dir;
    std::cout << j.dump() << std::endl;
    return 0;
}

inline int run_train(const std::string& preset, const std::string& config_path,
                     const std::string& data_dir, const std::string& out_dir,
                     bool seed_given, std::uint64_t seed, const std::string& relevance_mode,
                     bool map_threshold_given, double map_threshold) {
    TrainConfig cfg;
    if (!preset.empty()) {
        try {
            cfg = preset_by_name(preset).config;
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }
    if (!config_path.empty())
        cfg = train_config_from_json(parse_json_file(config_path), cfg, !preset.empty());
    if (seed_given) cfg.seed = seed;
    if (!relevance_mode.empty()) {
        try {
            cfg.relevance_mode = relevance_mode_from_string(relevance_mode);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }
    if (map_threshold_given) cfg.map_threshold = map_threshold;

    const Dataset full = load_dataset_dir(data_dir);
    Dataset train_set, val_set;
    const bool has_val = cfg.val_fraction > 0.0;
    if (has_val) {
        const SplitIndices split = validation_split(static_cast<int>(full.size()),
                                                    cfg.val_fraction, cfg.split_seed);
        train_set = subset(full, split.train);
        val_set = subset(full, split.val);
    } else {
        train_set = full;
    }

    const TrainResult result = train(train_set, cfg, has_val ? &val_set : nullptr);

    // The similarity matrix and its item list are persisted so ensembling
    // and evaluation never need to re-run the encoder.
    const Dataset& eval_set = has_val ? val_set : train_set;
    const MatrixF sim = similarity_matrix(result.model, eval_set.videos, eval_set.texts);
    const MatrixF rel =
        relevance_matrix(eval_set.annotations, eval_set.annotations, cfg.relevance_mode);
    const MetricReport report = evaluate_retrieval(sim, rel, cfg.map_threshold);

    fs::create_directories(out_dir);
    const fs::path out(out_dir);
    save_checkpoint(out / "model.ckpt", result.model);
    write_text_file(out / "history.jsonl", history_jsonl(result.history));
    write_fmat(out / "sim.fmat", sim);
    write_text_file(out / "val_annotations.csv", format_annotations_csv(eval_set.annotations));
    write_text_file(out / "metrics.json", metric_report_json(report).dump() + "\n");
    write_text_file(out / "run_config.json", train_config_json(cfg).dump(2) + "\n");

    std::cout << metric_report_json(report).dump() << std::endl;
    return 0;
}

inline int run_eval(const std::string& sim_path, const std::string& ann_path,
                    double map_threshold, bool percent, const std::string& relevance_mode,
                    const std::string& out_path) {
    const MatrixF sim = read_fmat(sim_path);
    const auto annotations = parse_annotations(read_text_file(ann_path));
    RelevanceMode mode = RelevanceMode::Full;
    if (!relevance_mode.empty()) {
        try {
            mode = relevance_mode_from_string(relevance_mode);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }
    if (sim.rows() != static_cast<Eigen::Index>(annotations.size()) ||
        sim.cols() != static_cast<Eigen::Index>(annotations.size()))
        throw FormatError("similarity matrix is " + std::to_string(sim.rows()) + "x" +
                          std::to_string(sim.cols()) + " but annotations list " +
                          std::to_string(annotations.size()) + " items");
    const MatrixF rel = relevance_matrix(annotations, annotations, mode);
    const MetricReport report = evaluate_retrieval(sim, rel, map_threshold);
    const std::string text = metric_report_json(report, percent).dump();
    if (!out_path.empty()) write_text_file(out_path, text + "\n");
    std::cout << text << std::endl;
    return 0;
}

inline int run_ensemble(const std::vector<std::string>& inputs, const std::string& out_path) {
    std::vector<MatrixF> mats;
    mats.reserve(inputs.size());
    for (const std::string& p : inputs) mats.push_back(read_fmat(p));
    MatrixF mean;
    try {
        mean = ensemble_mean(mats);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
    write_fmat(out_path, mean);
    ordered_json j;
    j["models"] = inputs.size();
    j["out"] = out_path;
    std::cout << j.dump() << std::endl;
    return 0;
}

inline int run_gradcheck(std::uint64_t seed, int instances, double tol, double eps) {
    const LossVariant variants[] = {LossVariant::FixedMargin, LossVariant::RelevanceMargin,
                                    LossVariant::Ranp};
    const DirectionWeights weights{1.0, 1.0, 1.0, 1.0};
    ordered_json j;
    double overall = 0.0;
    for (LossVariant variant : variants) {
        double worst = 0.0;
        for (int k = 0; k < instances; ++k) {
            SynthConfig scfg;
            scfg.n_items = 16;
            scfg.n_verb_classes = 4;
            scfg.n_noun_classes = 6;
            scfg.nouns_per_item = 2;
            scfg.d_video = 10;
            scfg.d_text = 9;
            scfg.noise_sigma = 0.5;
            scfg.seed = seed + 1000 * static_cast<std::uint64_t>(k) + static_cast<int>(variant);
            const Dataset ds = generate_dataset(scfg);
            const DualEncoder model = init_model(scfg.seed ^ 0x9e3779b97f4a7c15ull, scfg.d_video,
                                                 scfg.d_text, 8);
            const MatrixF rel = relevance_matrix(ds.annotations, ds.annotations,
                                                 RelevanceMode::Full);
            LossConfig lcfg;
            lcfg.variant = variant;
            worst = std::max(worst, grad_check(model, ds.videos.cast<double>(),
                                               ds.texts.cast<double>(), rel, lcfg, weights, eps));
        }
        j[to_string(variant)] = worst;
        overall = std::max(overall, worst);
    }
    j["max"] = overall;
    j["tol"] = tol;
    std::cout << j.dump() << std::endl;
    if (overall > tol) throw NumericError("gradient check failed: max relative error " +
                                          std::to_string(overall) + " exceeds tolerance");
    return 0;
}

inline int run_presets(const std::string& name) {
    if (!name.empty()) {
        const Preset* found = nullptr;
        for (const Preset& p : model_presets())
            if (p.name == name) found = &p;
        if (!found) throw ConfigError("unknown preset '" + name + "'");
        ordered_json j;
        j["name"] = found->name;
        j["description"] = found->description;
        j["config"] = train_config_json(found->config);
        std::cout << j.dump(2) << std::endl;
        return 0;
    }
    ordered_json arr = ordered_json::array();
    for (const Preset& p : model_presets()) {
        ordered_json j;
        j["name"] = p.name;
        j["description"] = p.description;
        j["config"] = train_config_json(p.config);
        arr.push_back(j);
    }
    std::cout << arr.dump(2) << std::endl;
    return 0;
}

}  // namespace detail

// Entry point; `args` excludes the program name.
inline int run(const std::vector<std::string>& args) {
    CLI::App app{"relevance-aware text-video retrieval: training, evaluation, ensembling"};
    app.require_subcommand(1);

    std::string gen_config, gen_out;
    std::uint64_t gen_seed = 0;
    auto* gen = app.add_subcommand("gen", "generate a synthetic dataset");
    gen->add_option("--config", gen_config, "synth config JSON");
    gen->add_option("--out", gen_out, "output directory")->required();
    gen->add_option("--seed", gen_seed, "override the config seed");

    std::string tr_preset, tr_config, tr_data, tr_out, tr_mode;
    std::uint64_t tr_seed = 0;
    double tr_map_threshold = 0.0;
    auto* tr = app.add_subcommand("train", "train a dual encoder");
    tr->add_option("--preset", tr_preset, "preset name (model1..model5)");
    tr->add_option("--config", tr_config, "train config JSON (applied over the preset)");
    tr->add_option("--data", tr_data, "dataset directory (videos.fmat, texts.fmat, "
                                      "annotations.csv)")->required();
    tr->add_option("--out", tr_out, "output directory")->required();
    tr->add_option("--seed", tr_seed, "override the training seed");
    tr->add_option("--relevance-mode", tr_mode, "full|verb1|noun1");
    tr->add_option("--map-threshold", tr_map_threshold,
                   "relevance threshold for mAP positives");

    std::string ev_sim, ev_ann, ev_mode, ev_out;
    double ev_map_threshold = 0.0;
    bool ev_percent = false;
    auto* ev = app.add_subcommand("eval", "evaluate a similarity matrix");
    ev->add_option("--sim", ev_sim, "similarity matrix (FMAT)")->required();
    ev->add_option("--ann", ev_ann, "annotations CSV for the matrix items")->required();
    ev->add_option("--map-threshold", ev_map_threshold,
                   "relevance threshold for mAP positives");
    ev->add_flag("--percent", ev_percent, "report values as percentages");
    ev->add_option("--relevance-mode", ev_mode, "full|verb1|noun1");
    ev->add_option("--out", ev_out, "also write the report to this file");

    std::vector<std::string> en_inputs;
    std::string en_out;
    auto* en = app.add_subcommand("ensemble", "average similarity matrices");
    en->add_option("--in", en_inputs, "input FMAT files")->required()->expected(-1);
    en->add_option("--out", en_out, "output FMAT file")->required();

    std::uint64_t gc_seed = 7;
    int gc_instances = 20;
    double gc_tol = 1e-4, gc_eps = 1e-4;
    auto* gc = app.add_subcommand(
        "gradcheck", "check analytic gradients against central finite differences "
                     "(all loss variants, all four directions)");
    gc->add_option("--seed", gc_seed, "master seed for the random instances");
    gc->add_option("--instances", gc_instances, "instances per loss variant")
        ->check(CLI::PositiveNumber);
    gc->add_option("--tol", gc_tol, "max relative error to accept");
    gc->add_option("--eps", gc_eps, "finite-difference step");

    std::string pr_name;
    auto* pr = app.add_subcommand("presets", "print the frozen model presets");
    pr->add_option("--name", pr_name, "print just this preset");

    std::vector<const char*> argv;
    argv.push_back("rrank");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: usage: " << e.what() << std::endl;
        return 2;
    }

    try {
        if (gen->parsed())
            return detail::run_gen(gen_config, gen_out, gen->count("--seed") > 0, gen_seed);
        if (tr->parsed())
            return detail::run_train(tr_preset, tr_config, tr_data, tr_out,
                                     tr->count("--seed") > 0, tr_seed, tr_mode,
                                     tr->count("--map-threshold") > 0, tr_map_threshold);
        if (ev->parsed())
            return detail::run_eval(ev_sim, ev_ann, ev_map_threshold, ev_percent, ev_mode,
                                    ev_out);
        if (en->parsed()) return detail::run_ensemble(en_inputs, en_out);
        if (gc->parsed()) return detail::run_gradcheck(gc_seed, gc_instances, gc_tol, gc_eps);
        if (pr->parsed()) return detail::run_presets(pr_name);
    } catch (const ConfigError& e) {
        std::cerr << "error: config: " << e.what() << std::endl;
        return 5;
    } catch (const ParseError& e) {
        std::cerr << "error: format: " << e.what() << std::endl;
        return 4;
    } catch (const FormatError& e) {
        std::cerr << "error: format: " << e.what() << std::endl;
        return 4;
    } catch (const IoError& e) {
        std::cerr << "error: io: " << e.what() << std::endl;
        return 3;
    } catch (const NumericError& e) {
        std::cerr << "error: numeric: " << e.what() << std::endl;
        return 6;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: config: " << e.what() << std::endl;
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << std::endl;
        return 1;
    }
    return 0;
}

}  // namespace rrank::cli
