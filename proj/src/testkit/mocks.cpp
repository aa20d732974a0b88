#include "agfsync/testkit/mocks.hpp"

#include <array>
#include <cmath>
#include <set>

#include "agfsync/core/base64.hpp"
#include "agfsync/core/error.hpp"
#include "agfsync/core/rng.hpp"
#include "agfsync/core/sha256.hpp"
#include "agfsync/core/text.hpp"
#include "agfsync/core/types.hpp"
#include "agfsync/imaging/png_io.hpp"

namespace agfsync::testkit {

namespace {

constexpr std::array<std::string_view, 24> kAdjectives = {
    "crimson", "quiet",   "weathered", "gleaming", "ancient", "misty",  "golden", "narrow",
    "vast",    "crooked", "silver",    "emerald",  "rustic",  "sunlit", "frozen", "winding",
    "mossy",   "amber",   "pale",      "stormy",   "velvet",  "copper", "shaded", "bright",
};

constexpr std::array<std::string_view, 40> kNouns = {
    "lighthouse", "orchard",   "market",   "bridge",   "canyon",  "fountain", "library",
    "windmill",   "harbor",    "glacier",  "meadow",   "tram",    "bakery",   "volcano",
    "atrium",     "pier",      "vineyard", "workshop", "lantern", "dune",     "waterfall",
    "courtyard",  "telescope", "carousel", "granary",  "estuary", "pagoda",   "jetty",
    "grove",      "quarry",    "aqueduct", "plaza",    "cottage", "marsh",    "observatory",
    "causeway",   "cliff",     "mill",     "arch",     "terrace",
},
    kPlaces = {
        "valley",   "city",    "coastline", "forest",   "desert",   "village",  "mountain",
        "island",   "garden",  "riverbank", "plateau",  "lagoon",   "foothill", "prairie",
        "canal",    "square",  "alley",     "shore",    "ridge",    "basin",    "harbor",
        "orchard",  "glade",   "tundra",    "savannah", "peninsula", "dockyard", "meadow",
        "hamlet",   "terrace", "outskirts", "bay",      "summit",   "wetland",  "boulevard",
        "steppe",   "grotto",  "cove",      "bluff",    "heath",
};

constexpr std::array<std::string_view, 16> kMoments = {
    "at dawn",          "under a full moon", "in soft rain",      "at dusk",
    "in morning fog",   "under clear skies", "during a festival", "after a storm",
    "in late autumn",   "at high noon",      "under northern lights", "in early spring",
    "at twilight",      "in deep winter",    "on a humid evening",    "under drifting clouds",
};

constexpr std::array<std::string_view, 8> kJudgeReasons = {
    "stronger composition",  "better color balance", "closer match to the description",
    "sharper subject focus", "more natural lighting", "cleaner background",
    "richer detail",         "more coherent scene",
};

std::string pick(std::span<const std::string_view> list, std::uint64_t key, std::uint64_t slot) {
    return std::string(list[std::size_t(core::splitmix64(key ^ (slot * 0x9e3779b97f4a7c15ULL)) %
                                        list.size())]);
}

std::string make_caption(std::uint64_t key, std::uint64_t index, std::uint64_t retry) {
    std::uint64_t mix = key ^ (index * 191 + retry * 7919 + 1);
    std::string caption = "A " + pick(kAdjectives, mix, 1) + " " + pick(kNouns, mix, 2) + " " +
                          pick(kMoments, mix, 3) + ", overlooking a " + pick(kAdjectives, mix, 4) +
                          " " + pick(kPlaces, mix, 5);
    if (core::splitmix64(mix ^ 0x51) % 2 == 0) {
        caption += " where a " + pick(kNouns, mix, 6) + " casts long shadows";
    }
    caption += ".";
    return caption;
}

int parse_requested_num(const std::string& instruction) {
    // The caption template carries the literal rule "Generate {num} descriptions."
    const std::string marker = "Generate ";
    std::size_t pos = instruction.find(marker);
    while (pos != std::string::npos) {
        std::size_t num_begin = pos + marker.size();
        std::size_t num_end = num_begin;
        while (num_end < instruction.size() && std::isdigit((unsigned char)instruction[num_end])) {
            ++num_end;
        }
        if (num_end > num_begin &&
            instruction.compare(num_end, 14, " descriptions.") == 0) {
            return std::stoi(instruction.substr(num_begin, num_end - num_begin));
        }
        pos = instruction.find(marker, pos + 1);
    }
    return 5;
}

}  // namespace

std::uint64_t MockSuite::key(std::string_view domain, std::span<const std::uint8_t> payload) const {
    core::Sha256 h;
    std::uint8_t salt_bytes[8];
    for (int i = 0; i < 8; ++i) salt_bytes[i] = std::uint8_t(config_.salt >> (8 * i));
    h.update(salt_bytes, sizeof(salt_bytes));
    h.update(domain);
    h.update(payload);
    auto digest = h.finish();
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v = (v << 8) | digest[std::size_t(i)];
    return v;
}

std::uint64_t MockSuite::key(std::string_view domain, std::string_view payload) const {
    return key(domain, std::span<const std::uint8_t>(
                           reinterpret_cast<const std::uint8_t*>(payload.data()), payload.size()));
}

std::string MockSuite::mock_llm(const std::string& instruction) const {
    std::uint64_t h = key("llm", instruction);

    if (instruction.find("question_id") != std::string::npos) {
        // QA decomposition request: emit >= 15 schema-valid entries.
        nlohmann::json entries = nlohmann::json::array();
        for (int i = 0; i < config_.qa_entries; ++i) {
            std::uint64_t noun_idx = (h + std::uint64_t(i)) % kNouns.size();
            std::string noun(kNouns[std::size_t(noun_idx)]);
            std::string place = pick(kPlaces, h, std::uint64_t(i) * 3 + 1);
            auto type = core::all_element_types()[std::size_t(
                core::splitmix64(h ^ std::uint64_t(i * 13 + 7)) % core::kElementTypeCount)];
            int flag = core::splitmix64(h ^ std::uint64_t(i * 31 + 5)) % 8 == 0 ? 0 : 1;
            entries.push_back({{"question_id", i + 1},
                               {"question", "Is there a " + noun + " near the " + place + "?"},
                               {"answer", "yes"},
                               {"element_type", core::element_type_name(type)},
                               {"element", noun},
                               {"flag", flag}});
        }
        return entries.dump();
    }

    // Caption batch request.
    int num = parse_requested_num(instruction);
    nlohmann::json descriptions = nlohmann::json::array();
    std::set<std::string> seen;
    for (int i = 0; i < num; ++i) {
        std::uint64_t retry = 0;
        std::string caption = make_caption(h, std::uint64_t(i), retry);
        while (!seen.insert(core::normalize_caption(caption)).second) {
            caption = make_caption(h, std::uint64_t(i), ++retry);
        }
        descriptions.push_back(caption);
    }
    return nlohmann::json{{"descriptions", descriptions}}.dump();
}

std::vector<std::uint8_t> MockSuite::mock_t2i(const gateway::Embedding& condition,
                                              std::int64_t latent_seed) const {
    condition.validate();

    // Quantize the condition so nearby embeddings share an output cell.
    core::Sha256 h;
    std::uint8_t salt_bytes[8];
    for (int i = 0; i < 8; ++i) salt_bytes[i] = std::uint8_t(config_.salt >> (8 * i));
    h.update(salt_bytes, sizeof(salt_bytes));
    h.update(std::string_view("t2i"));
    for (double v : condition.values) {
        auto cell = std::int64_t(std::floor(v / config_.quantize_step));
        std::uint8_t cell_bytes[8];
        for (int i = 0; i < 8; ++i) cell_bytes[i] = std::uint8_t(std::uint64_t(cell) >> (8 * i));
        h.update(cell_bytes, sizeof(cell_bytes));
    }
    std::uint8_t seed_bytes[8];
    for (int i = 0; i < 8; ++i) seed_bytes[i] = std::uint8_t(std::uint64_t(latent_seed) >> (8 * i));
    h.update(seed_bytes, sizeof(seed_bytes));

    auto digest = h.finish();
    std::uint64_t pixel_key = 0;
    for (int i = 0; i < 8; ++i) pixel_key = (pixel_key << 8) | digest[std::size_t(i)];

    core::CounterRng rng(pixel_key);
    imaging::GrayImage image;
    image.width = config_.image_size;
    image.height = config_.image_size;
    image.pixels.resize(std::size_t(image.width) * std::size_t(image.height));
    for (std::size_t i = 0; i < image.pixels.size(); ++i) {
        image.pixels[i] = std::uint8_t(rng.bits(i) & 0xff);
    }
    return imaging::encode_gray_png(image);
}

std::string MockSuite::mock_vqa(std::span<const std::uint8_t> image,
                                const std::string& question) const {
    core::Sha256 h;
    std::uint8_t salt_bytes[8];
    for (int i = 0; i < 8; ++i) salt_bytes[i] = std::uint8_t(config_.salt >> (8 * i));
    h.update(salt_bytes, sizeof(salt_bytes));
    h.update(std::string_view("vqa"));
    h.update(image);
    h.update(question);
    auto digest = h.finish();
    return (digest[31] & 1) == 0 ? "yes" : "no";
}

gateway::Embedding MockSuite::embedding_from_key(std::uint64_t key) const {
    core::CounterRng rng(key);
    gateway::Embedding out;
    out.values.resize(std::size_t(config_.embed_dim));
    double norm_sq = 0.0;
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        double v = rng.uniform01(i) * 2.0 - 1.0;
        out.values[i] = v;
        norm_sq += v * v;
    }
    double norm = std::sqrt(norm_sq);
    for (double& v : out.values) v /= norm;
    return out;
}

gateway::Embedding MockSuite::mock_embed_text(const std::string& text) const {
    return embedding_from_key(key("embed-text", text));
}

gateway::Embedding MockSuite::mock_embed_image(std::span<const std::uint8_t> image) const {
    return embedding_from_key(key("embed-image", image));
}

double MockSuite::mock_aesthetic(std::span<const std::uint8_t> image) const {
    return core::CounterRng(key("aesthetic", image)).uniform01(0);
}

std::string MockSuite::mock_judge(const std::string& instruction,
                                  std::span<const std::uint8_t> image_a,
                                  std::span<const std::uint8_t> image_b) const {
    char choice;
    std::uint64_t reason_key;
    if (config_.judge_position_invariant) {
        std::uint64_t key_a = key("judge-image", image_a);
        std::uint64_t key_b = key("judge-image", image_b);
        choice = key_a >= key_b ? 'A' : 'B';
        reason_key = key_a ^ key_b;
    } else {
        core::Sha256 h;
        std::uint8_t salt_bytes[8];
        for (int i = 0; i < 8; ++i) salt_bytes[i] = std::uint8_t(config_.salt >> (8 * i));
        h.update(salt_bytes, sizeof(salt_bytes));
        h.update(std::string_view("judge-ordered"));
        h.update(instruction);
        h.update(image_a);
        h.update(image_b);
        auto digest = h.finish();
        choice = (digest[31] & 1) == 0 ? 'A' : 'B';
        reason_key = digest[30];
    }
    nlohmann::json reply = {{"reason", pick(kJudgeReasons, reason_key, 11)},
                            {"choice", std::string(1, choice)}};
    return reply.dump();
}

nlohmann::json MockSuite::handle(gateway::BackendKind kind, const nlohmann::json& request) const {
    using gateway::BackendKind;
    auto image_field = [&](const char* field) {
        if (!request.contains(field)) raise(ErrorKind::parse, std::string(field) + " missing");
        return core::base64_decode(request.at(field).get<std::string>());
    };

    switch (kind) {
        case BackendKind::llm:
            return {{"reply", mock_llm(request.at("instruction").get<std::string>())}};
        case BackendKind::t2i: {
            gateway::Embedding condition{request.at("embedding").get<std::vector<double>>()};
            condition.validate();
            auto bytes = mock_t2i(condition, request.at("latent_seed").get<std::int64_t>());
            return {{"image_b64", core::base64_encode(bytes)}};
        }
        case BackendKind::vqa: {
            auto image = image_field("image_b64");
            return {{"answer", mock_vqa(image, request.at("question").get<std::string>())}};
        }
        case BackendKind::embed: {
            gateway::Embedding e;
            if (request.contains("text")) {
                e = mock_embed_text(request.at("text").get<std::string>());
            } else {
                e = mock_embed_image(image_field("image_b64"));
            }
            return {{"embedding", e.values}, {"dim", e.dim()}};
        }
        case BackendKind::aesthetic:
            return {{"score", mock_aesthetic(image_field("image_b64"))}};
        case BackendKind::judge: {
            auto image_a = image_field("image_a_b64");
            auto image_b = image_field("image_b_b64");
            return {{"reply",
                     mock_judge(request.at("instruction").get<std::string>(), image_a, image_b)}};
        }
    }
    raise(ErrorKind::state, "unhandled backend kind");
}

void MockSuite::install(gateway::LocalTransport& transport) const {
    for (std::size_t i = 0; i < gateway::kBackendKindCount; ++i) {
        auto kind = gateway::BackendKind(i);
        transport.route(std::string(gateway::backend_route(kind)),
                        [suite = *this, kind](const std::string& body) -> gateway::HttpResponse {
                            try {
                                auto request = nlohmann::json::parse(body);
                                return {200, suite.handle(kind, request).dump()};
                            } catch (const std::exception& e) {
                                return {400, nlohmann::json{{"error", e.what()}}.dump()};
                            }
                        });
    }
}

}  // namespace agfsync::testkit
