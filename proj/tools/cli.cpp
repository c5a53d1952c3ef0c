#include "cli.hpp"

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "plott/convexity.hpp"
#include "plott/dot.hpp"
#include "plott/functorial.hpp"
#include "plott/geometry.hpp"
#include "plott/json_io.hpp"
#include "plott/lattice.hpp"

namespace plott::cli {
namespace {

using io::DocKind;
using io::Document;
using io::json;

constexpr int kDefaultCap = 12;

// Exit status 2 carrier: the command ran, the checked property is false.
struct property_violated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Context {
    std::ostream& out;
    int cap = kDefaultCap;

    void check_cap(const GroundSet& ground) const {
        if (ground.size() > cap) {
            throw capacity_error("ground of size " + std::to_string(ground.size()) +
                                 " exceeds the cap of " + std::to_string(cap) +
                                 " (raise with --cap or PLOTT_CAP)");
        }
    }

    Document load(const std::string& path) const {
        Document doc = io::load_document_file(path);
        switch (doc.kind) {
            case DocKind::choice:
                check_cap(doc.choice->ground());
                break;
            case DocKind::map:
                check_cap(doc.map->source());
                check_cap(doc.map->target());
                break;
            case DocKind::words:
                check_cap(doc.words->ground());
                break;
            case DocKind::order:
                check_cap(doc.order->ground());
                break;
            case DocKind::family:
                check_cap(doc.family->ground());
                break;
            case DocKind::ground:
                check_cap(*doc.ground);
                break;
        }
        return doc;
    }

    ChoiceFunction load_choice(const std::string& path) const {
        Document doc = load(path);
        if (doc.kind != DocKind::choice) {
            throw validation_error(path + ": expected a choice document");
        }
        return std::move(*doc.choice);
    }

    SetMap load_map(const std::string& path) const {
        Document doc = load(path);
        if (doc.kind != DocKind::map) {
            throw validation_error(path + ": expected a map document");
        }
        return std::move(*doc.map);
    }

    WordSet load_words(const std::string& path) const {
        Document doc = load(path);
        if (doc.kind != DocKind::words) {
            throw validation_error(path + ": expected a words document");
        }
        return std::move(*doc.words);
    }

    SimpleWord load_single_word(const std::string& path) const {
        WordSet ws = load_words(path);
        if (ws.size() != 1) {
            throw validation_error(path + ": expected a words document with exactly one word");
        }
        return ws.word(0);
    }

    PartialOrder load_order(const std::string& path) const {
        Document doc = load(path);
        if (doc.kind != DocKind::order) {
            throw validation_error(path + ": expected an order document");
        }
        return std::move(*doc.order);
    }

    GroundSet load_ground(const std::string& path) const {
        Document doc = load(path);
        if (doc.kind != DocKind::ground) {
            throw validation_error(path + ": expected a ground document");
        }
        return std::move(*doc.ground);
    }

    void emit(const json& j) const { out << io::serialize(j); }
};

json pieces_to_json(const PieceStructure& ps) {
    json list = json::array();
    for (int i = 0; i < ps.size(); ++i) {
        const Piece& p = ps.pieces()[static_cast<std::size_t>(i)];
        list.push_back(json{{"name", ps.piece_ground().symbol(i)},
                            {"owner", ps.base().symbol(p.owner)},
                            {"piece", subset_key(ps.base(), p.set)}});
    }
    json covers = json::array();
    for (auto [greater, lesser] : ps.order().covers()) {
        covers.push_back(
            json::array({ps.piece_ground().symbol(greater), ps.piece_ground().symbol(lesser)}));
    }
    return json{{"ground", io::to_json(ps.base())}, {"pieces", std::move(list)}, {"covers", std::move(covers)}};
}

int run_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Computational algebra of path-independent choice functions"};
    app.require_subcommand(1);

    Context ctx{out};
    if (const char* env = std::getenv("PLOTT_CAP")) {
        try {
            ctx.cap = std::stoi(env);
        } catch (const std::exception&) {
            throw validation_error("PLOTT_CAP must be an integer");
        }
    }
    app.add_option("--cap", ctx.cap, "ground size cap for loaded documents (default 12, hard max 16)");

    std::vector<std::string> files;
    std::string map_file;
    std::string ground_file;
    std::string phi_file;
    std::string psi_file;
    std::string strategy = "geometry";

    auto* check_pi = app.add_subcommand("check-pi", "test path independence");
    check_pi->add_option("file", files)->required()->expected(1);

    auto* plottize_cmd = app.add_subcommand("plottize", "greatest path-independent minorant");
    plottize_cmd->add_option("file", files)->required()->expected(1);

    auto* join_cmd = app.add_subcommand("join", "pointwise union of two functions");
    join_cmd->add_option("files", files)->required()->expected(2);

    auto* meet_cmd = app.add_subcommand("meet", "greatest common path-independent minorant");
    meet_cmd->add_option("files", files)->required()->expected(2);

    auto* support_cmd = app.add_subcommand("support", "elements chosen from their singleton");
    support_cmd->add_option("file", files)->required()->expected(1);

    auto* basement_cmd = app.add_subcommand("basement", "words whose linear function lies below");
    basement_cmd->add_option("file", files)->required()->expected(1);

    auto* socle_cmd = app.add_subcommand("socle", "maximal basement words");
    socle_cmd->add_option("file", files)->required()->expected(1);

    auto* geometry_cmd = app.add_subcommand("geometry", "closure-fixed subsets of a function");
    geometry_cmd->add_option("file", files)->required()->expected(1);

    auto* from_geometry_cmd = app.add_subcommand("from-geometry", "extreme-point function of a geometry");
    from_geometry_cmd->add_option("file", files)->required()->expected(1);

    auto* pieces_cmd = app.add_subcommand("pieces", "maximal convex sets avoiding each element");
    pieces_cmd->add_option("file", files)->required()->expected(1);

    auto* rationalize_cmd = app.add_subcommand("rationalize", "canonical superset rationalization");
    rationalize_cmd->add_option("file", files)->required()->expected(1);

    auto* verify_rat_cmd = app.add_subcommand("verify-rat", "check a superset rationalization");
    verify_rat_cmd->add_option("files", files)->required()->expected(2);
    verify_rat_cmd->add_option("--map", map_file, "projection map document")->required();

    auto* image_cmd = app.add_subcommand("image", "direct image of a function or words");
    image_cmd->add_option("file", files)->required()->expected(1);
    image_cmd->add_option("--map", map_file, "map document")->required();

    auto* preimage_cmd = app.add_subcommand("preimage", "inverse image of a function");
    preimage_cmd->add_option("file", files)->required()->expected(1);
    preimage_cmd->add_option("--map", map_file, "map document")->required();

    auto* extend_cmd = app.add_subcommand("extend", "trivial extension to a larger ground");
    extend_cmd->add_option("file", files)->required()->expected(1);
    extend_cmd->add_option("--ground", ground_file, "target ground document")->required();
    extend_cmd->add_option("--map", map_file, "embedding map (default: match symbols)");

    auto* sum_cmd = app.add_subcommand("sum", "direct sum on disjoint grounds");
    sum_cmd->add_option("files", files)->required()->expected(2);

    auto* product_cmd = app.add_subcommand("product", "direct product on the cartesian ground");
    product_cmd->add_option("files", files)->required()->expected(2);

    auto* correspond_cmd = app.add_subcommand("correspond", "apply a correspondence to a function");
    correspond_cmd->add_option("files", files, "correspondence function, then argument function")
        ->required()
        ->expected(2);
    correspond_cmd->add_option("--phi", phi_file, "leg onto the argument ground")->required();
    correspond_cmd->add_option("--psi", psi_file, "leg onto the result ground")->required();

    auto* shuffle_cmd = app.add_subcommand("shuffle", "interleavings of two disjoint words");
    shuffle_cmd->add_option("files", files)->required()->expected(2);

    auto* melange_cmd = app.add_subcommand("melange", "simplified shuffles of tagged copies");
    melange_cmd->add_option("files", files)->required()->expected(-1);

    auto* segment_cmd = app.add_subcommand("segment", "prefixes of all melanges of two words");
    segment_cmd->add_option("files", files)->required()->expected(2);

    auto* hull_cmd = app.add_subcommand("hull", "convex hull of a word set");
    hull_cmd->add_option("file", files)->required()->expected(1);

    auto* is_convex_cmd = app.add_subcommand("is-convex", "test convexity of a word set");
    is_convex_cmd->add_option("file", files)->required()->expected(1);

    auto* enumerate_cmd = app.add_subcommand("enumerate", "all path-independent functions");
    enumerate_cmd->add_option("file", files, "ground document")->required()->expected(1);
    enumerate_cmd->add_option("--strategy", strategy, "brute or geometry (default geometry)")
        ->check(CLI::IsMember({"brute", "geometry"}));

    auto* dot_cmd = app.add_subcommand("dot", "Hasse diagram of an order, family or word set");
    dot_cmd->add_option("file", files)->required()->expected(1);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    if (ctx.cap < 0 || ctx.cap > GroundSet::kMaxSize) {
        throw validation_error("--cap must lie between 0 and 16");
    }

    if (check_pi->parsed()) {
        const ChoiceFunction f = ctx.load_choice(files[0]);
        const bool ok = is_path_independent(f);
        ctx.emit(json{{"path_independent", ok}});
        if (!ok) {
            throw property_violated("the choice function is not path independent");
        }
    } else if (plottize_cmd->parsed()) {
        ctx.emit(io::to_json(plottize(ctx.load_choice(files[0]))));
    } else if (join_cmd->parsed()) {
        ctx.emit(io::to_json(join(ctx.load_choice(files[0]), ctx.load_choice(files[1]))));
    } else if (meet_cmd->parsed()) {
        ctx.emit(io::to_json(meet(ctx.load_choice(files[0]), ctx.load_choice(files[1]))));
    } else if (support_cmd->parsed()) {
        const ChoiceFunction f = ctx.load_choice(files[0]);
        ctx.emit(json{{"ground", io::to_json(f.ground())}, {"subset", subset_key(f.ground(), support(f))}});
    } else if (basement_cmd->parsed()) {
        ctx.emit(io::to_json(basement(ctx.load_choice(files[0]))));
    } else if (socle_cmd->parsed()) {
        ctx.emit(io::to_json(socle(ctx.load_choice(files[0]))));
    } else if (geometry_cmd->parsed()) {
        ctx.emit(io::to_json(to_geometry(ctx.load_choice(files[0]))));
    } else if (from_geometry_cmd->parsed()) {
        Document doc = ctx.load(files[0]);
        if (doc.kind != DocKind::family) {
            throw validation_error(files[0] + ": expected a family document");
        }
        ctx.emit(io::to_json(from_geometry(*doc.family)));
    } else if (pieces_cmd->parsed()) {
        ctx.emit(pieces_to_json(pieces(ctx.load_choice(files[0]))));
    } else if (rationalize_cmd->parsed()) {
        const CanonicalRationalization cr = canonical_rationalization(ctx.load_choice(files[0]));
        ctx.emit(json{{"order", io::to_json(cr.order)}, {"map", io::to_json(cr.to_owner)}});
    } else if (verify_rat_cmd->parsed()) {
        const PartialOrder y_order = ctx.load_order(files[0]);
        const ChoiceFunction f = ctx.load_choice(files[1]);
        const SetMap psi = ctx.load_map(map_file);
        const bool ok = verify_ss_rationalization(y_order, psi, f);
        ctx.emit(json{{"rationalization", ok}});
        if (!ok) {
            throw property_violated("the triple does not rationalize the function");
        }
    } else if (image_cmd->parsed()) {
        const SetMap phi = ctx.load_map(map_file);
        Document doc = ctx.load(files[0]);
        if (doc.kind == DocKind::choice) {
            ctx.emit(io::to_json(direct_image(phi, *doc.choice)));
        } else if (doc.kind == DocKind::words) {
            std::vector<SimpleWord> images;
            for (const SimpleWord& w : doc.words->words()) {
                images.push_back(word_image(phi, w));
            }
            ctx.emit(io::to_json(WordSet(phi.target(), std::move(images))));
        } else {
            throw validation_error(files[0] + ": expected a choice or words document");
        }
    } else if (preimage_cmd->parsed()) {
        ctx.emit(io::to_json(inverse_image(ctx.load_map(map_file), ctx.load_choice(files[0]))));
    } else if (extend_cmd->parsed()) {
        const ChoiceFunction f = ctx.load_choice(files[0]);
        const GroundSet target = ctx.load_ground(ground_file);
        SetMap embed = [&] {
            if (!map_file.empty()) {
                return ctx.load_map(map_file);
            }
            std::vector<int> images;
            for (const std::string& s : f.ground().symbols()) {
                images.push_back(target.index_of(s));
            }
            return SetMap(f.ground(), target, std::move(images));
        }();
        ctx.emit(io::to_json(trivial_extension(f, target, embed)));
    } else if (sum_cmd->parsed()) {
        const ChoiceFunction result = direct_sum(ctx.load_choice(files[0]), ctx.load_choice(files[1]));
        ctx.check_cap(result.ground());
        ctx.emit(io::to_json(result));
    } else if (product_cmd->parsed()) {
        const ChoiceFunction f = ctx.load_choice(files[0]);
        const ChoiceFunction g = ctx.load_choice(files[1]);
        if (f.size() * g.size() > ctx.cap) {
            throw capacity_error("product ground of size " + std::to_string(f.size() * g.size()) +
                                 " exceeds the cap of " + std::to_string(ctx.cap));
        }
        ctx.emit(io::to_json(direct_product(f, g)));
    } else if (correspond_cmd->parsed()) {
        const ChoiceFunction h = ctx.load_choice(files[0]);
        const ChoiceFunction f = ctx.load_choice(files[1]);
        ctx.emit(io::to_json(apply_correspondence(h, ctx.load_map(phi_file), ctx.load_map(psi_file), f)));
    } else if (shuffle_cmd->parsed()) {
        ctx.emit(io::to_json(shuffle(ctx.load_single_word(files[0]), ctx.load_single_word(files[1]))));
    } else if (melange_cmd->parsed()) {
        std::vector<SimpleWord> words;
        for (const std::string& file : files) {
            for (const SimpleWord& w : ctx.load_words(file).words()) {
                words.push_back(w);
            }
        }
        ctx.emit(io::to_json(melange_family(words)));
    } else if (segment_cmd->parsed()) {
        ctx.emit(io::to_json(segment(ctx.load_single_word(files[0]), ctx.load_single_word(files[1]))));
    } else if (hull_cmd->parsed()) {
        ctx.emit(io::to_json(convex_hull(ctx.load_words(files[0]))));
    } else if (is_convex_cmd->parsed()) {
        const bool ok = is_convex(ctx.load_words(files[0]));
        ctx.emit(json{{"convex", ok}});
        if (!ok) {
            throw property_violated("the word set is not convex");
        }
    } else if (enumerate_cmd->parsed()) {
        const GroundSet ground = ctx.load_ground(files[0]);
        const EnumerationStrategy s = strategy == "brute" ? EnumerationStrategy::brute_force
                                                          : EnumerationStrategy::geometry_search;
        const std::vector<ChoiceFunction> all = enumerate_plott(ground, s);
        json functions = json::array();
        for (const ChoiceFunction& f : all) {
            json entries = json::object();
            for (mask_t a = 1; a < f.subset_count(); ++a) {
                entries[subset_key(ground, Subset(a))] = subset_key(ground, Subset(f.at(a)));
            }
            functions.push_back(std::move(entries));
        }
        ctx.emit(json{{"ground", io::to_json(ground)},
                      {"count", all.size()},
                      {"functions", std::move(functions)}});
    } else if (dot_cmd->parsed()) {
        Document doc = ctx.load(files[0]);
        if (doc.kind == DocKind::order) {
            out << export_dot(*doc.order);
        } else if (doc.kind == DocKind::family) {
            out << export_dot(*doc.family);
        } else if (doc.kind == DocKind::words) {
            out << export_dot(*doc.words);
        } else {
            throw validation_error(files[0] + ": expected an order, family or words document");
        }
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run_impl(args, out, err);
    } catch (const property_violated& e) {
        err << "property violated: " << e.what() << "\n";
        return 2;
    } catch (const capacity_error& e) {
        err << "capacity exceeded: " << e.what() << "\n";
        return 3;
    } catch (const validation_error& e) {
        err << "invalid input: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
    }
    return run(args, out, err);
}

}  // namespace plott::cli
