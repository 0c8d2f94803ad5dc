#include "akshar/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "akshar/error.hpp"
#include "akshar/operations.hpp"
#include "akshar/server.hpp"
#include "akshar/text.hpp"

#ifndef AKSHAR_DEFAULT_DATA_DIR
#define AKSHAR_DEFAULT_DATA_DIR "data"
#endif

namespace akshar {

namespace {

struct Io {
    std::istream& in;
    std::ostream& out;
    std::string text;       // --text
    std::string in_path;    // --in, "-" for stdin
    std::string out_path;   // --out, "-" for stdout

    std::string read_bytes() const
    {
        if (in_path != "-")
            return read_file(in_path);
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }

    // --text wins; otherwise the input with one trailing newline dropped.
    std::string read_text() const
    {
        if (!text.empty())
            return text;
        auto s = read_bytes();
        if (s.ends_with('\n'))
            s.pop_back();
        if (s.ends_with('\r'))
            s.pop_back();
        return s;
    }

    void write_bytes(std::string_view bytes) const
    {
        if (out_path == "-")
            out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        else
            write_file(out_path, bytes);
    }

    void write_line(std::string_view line) const { write_bytes(std::string(line) + "\n"); }
};

void add_input(CLI::App* cmd, Io& io, bool text)
{
    if (text)
        cmd->add_option("--text", io.text, "Input text (instead of --in)");
    cmd->add_option("--in", io.in_path, "Input file, - for stdin")->capture_default_str();
    cmd->add_option("--out", io.out_path, "Output file, - for stdout")->capture_default_str();
}

std::string to_hex(std::string_view bytes)
{
    static const char* digits = "0123456789abcdef";
    std::string s;
    for (unsigned char b : bytes) {
        s += digits[b >> 4];
        s += digits[b & 15];
    }
    return s;
}

std::string from_hex(std::string_view hex)
{
    std::string out;
    int nibble = -1;
    for (char c : hex) {
        if (std::isspace(static_cast<unsigned char>(c)))
            continue;
        int v = std::isdigit(static_cast<unsigned char>(c)) ? c - '0'
                : (c >= 'a' && c <= 'f')                    ? c - 'a' + 10
                : (c >= 'A' && c <= 'F')                    ? c - 'A' + 10
                                                            : -1;
        if (v < 0)
            throw Error(ErrorKind::BadRequest, std::string("bad hex digit '") + c + "'");
        if (nibble < 0) {
            nibble = v;
        } else {
            out += static_cast<char>(nibble * 16 + v);
            nibble = -1;
        }
    }
    if (nibble >= 0)
        throw Error(ErrorKind::BadRequest, "odd number of hex digits");
    return out;
}

std::span<const std::uint8_t> as_bytes(const std::string& s)
{
    return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

std::string as_string(const Bytes& b)
{
    return {b.begin(), b.end()};
}

// Interactive line mode. Each whitespace-separated token is either a run of
// keys or a command: :1..:9 select on the current page, :next, :prev, :bs,
// :raw, :top (best candidate, or raw commit if none), :space.
void run_ime(std::shared_ptr<const ConversionTable> table, std::istream& in, std::ostream& out)
{
    ImeSession session(std::move(table));
    std::size_t page = 0;
    std::string line;
    auto show = [&] {
        out << "[" << session.buffer() << "]";
        for (std::size_t i = 0; const auto& c : session.page(page))
            out << " " << ++i << ":" << u32_to_utf8(c.output);
        if (session.page_count() > 1)
            out << " (" << page + 1 << "/" << session.page_count() << ")";
        out << "\n";
    };
    while (std::getline(in, line)) {
        for (auto token : split_ws(line)) {
            try {
                if (token.size() == 2 && token[0] == ':' && token[1] >= '1' && token[1] <= '9') {
                    session.select(page * kCandidatePageSize + static_cast<std::size_t>(token[1] - '1'));
                } else if (token == ":next") {
                    if (page + 1 < session.page_count())
                        ++page;
                    continue;
                } else if (token == ":prev") {
                    if (page > 0)
                        --page;
                    continue;
                } else if (token == ":bs") {
                    session.backspace();
                } else if (token == ":raw") {
                    session.commit_raw();
                } else if (token == ":top") {
                    if (session.candidates().empty())
                        session.commit_raw();
                    else
                        session.select(0);
                } else if (token == ":space") {
                    if (!session.buffer().empty())
                        session.commit_raw();
                    session.feed_key(' ');
                    session.commit_raw();
                } else {
                    for (char c : token)
                        session.feed_key(c);
                }
            } catch (const Error& e) {
                out << "! " << e.what() << "\n";
            }
            page = 0;
        }
        show();
    }
    out << "committed: " << u32_to_utf8(session.committed()) << "\n";
}

std::string describe_resources(const ResourceRegistry& reg)
{
    std::ostringstream s;
    for (const auto& r : reg.resources()) {
        s << to_string(r.kind) << "\t" << r.name << "\t";
        for (std::size_t i = 0; i < r.tags.size(); ++i)
            s << (i ? "," : "") << r.tags[i].language << ":" << to_string(r.tags[i].group);
        s << "\t" << std::filesystem::relative(r.path, reg.data_dir()).generic_string();
        if (!r.available)
            s << "\t(missing)";
        s << "\n";
    }
    return s.str();
}

int env_int(const char* name, int fallback)
{
    const char* v = std::getenv(name);
    return v && *v ? std::atoi(v) : fallback;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err)
{
    CLI::App app{"Double-byte Indic text processing: codec, fonts, input and gloss"};
    app.require_subcommand(1);

    const char* env_data = std::getenv("AKSHAR_DATA");
    std::string data_dir = env_data && *env_data ? env_data : AKSHAR_DEFAULT_DATA_DIR;
    app.add_option("--data", data_dir, "Resource directory holding manifest.json (env AKSHAR_DATA)")
        ->capture_default_str();

    Io io{in, out, {}, "-", "-"};
    std::string table(ops::kDefaultTable);
    std::string rules(ops::kDefaultRules);
    bool interchange = false, lossy = false, hex = false, as_json = false;
    std::string from, to, fallback = "strict", pair, language, direction;
    int size = 16;

    auto* encode = app.add_subcommand("encode", "Text to internal (or interchange) code");
    add_input(encode, io, true);
    encode->add_option("--table", table)->capture_default_str();
    encode->add_flag("--interchange", interchange, "Emit interchange code");
    encode->add_flag("--hex", hex, "Write hex digits instead of raw bytes");

    auto* decode = app.add_subcommand("decode", "Internal (or interchange) code to text");
    add_input(decode, io, false);
    decode->add_option("--table", table)->capture_default_str();
    decode->add_flag("--interchange", interchange, "Input is interchange code");
    decode->add_flag("--lossy", lossy, "Replace bad sequences with U+FFFD");
    decode->add_flag("--hex", hex, "Input is hex digits");

    auto* conv = app.add_subcommand("interchange", "Convert between internal and interchange code");
    add_input(conv, io, false);
    conv->add_option("--to", direction, "interchange or internal")
        ->required()
        ->check(CLI::IsMember({"interchange", "internal"}));

    auto* translit = app.add_subcommand("translit", "Transliterate between parallel scripts");
    add_input(translit, io, true);
    translit->add_option("--from", from, "Source script (default: inferred)");
    translit->add_option("--to", to, "Target script, or hk for romanization")->required();
    translit->add_option("--fallback", fallback, "strict, passthrough or mark")->capture_default_str();
    translit->add_option("--table", table)->capture_default_str();

    auto* render = app.add_subcommand("render", "Shape and render one line to PBM");
    add_input(render, io, true);
    render->add_option("--size", size, "16, 24 or 48")->capture_default_str();
    render->add_option("--rules", rules)->capture_default_str();

    auto* coverage = app.add_subcommand("coverage", "Per-level coverage of a corpus");
    add_input(coverage, io, false);
    coverage->add_option("--table", table)->capture_default_str();

    auto* ime = app.add_subcommand("ime", "Phonetic input in line mode");
    ime->add_option("--lang", language, "Conversion table language")->required();

    auto* gloss = app.add_subcommand("gloss", "Word-by-word gloss into a related language");
    add_input(gloss, io, true);
    gloss->add_option("--pair", pair, "source-target, e.g. te-hi")->required();

    auto* resources = app.add_subcommand("resources", "Inspect shipped resources");
    resources->require_subcommand(1);
    auto* list = resources->add_subcommand("list", "List loaded resources and language groups");
    list->add_flag("--json", as_json);

    ServerConfig config;
    config.port = env_int("AKSHAR_PORT", config.port);
    int idle_minutes = 30;
    auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP service");
    serve_cmd->add_option("--host", config.host)->capture_default_str();
    serve_cmd->add_option("--port", config.port, "Port (env AKSHAR_PORT)")->capture_default_str();
    serve_cmd->add_option("--idle-minutes", idle_minutes, "Session idle expiry")->capture_default_str();

    std::string table_path, rules_path;
    auto* mkfont = app.add_subcommand("mkfont", "Build the placeholder bitmap font for a table");
    mkfont->add_option("--table", table_path, "Code table file")->required();
    mkfont->add_option("--rules", rules_path, "Shaping rules whose glyph variants to include");
    mkfont->add_option("--size", size)->capture_default_str();
    mkfont->add_option("--out", io.out_path)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        if (!reversed.empty())
            reversed.pop_back();  // program name
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (mkfont->parsed()) {
            auto ct = CodeTable::load(table_path);
            std::vector<CodePoint> extra;
            if (!rules_path.empty())
                extra = RuleSet::load(rules_path, ct).variant_codes();
            auto font = make_debug_font(ct, extra, parse_glyph_size(size));
            write_file(io.out_path, std::string_view(reinterpret_cast<const char*>(font.data()), font.size()));
            return 0;
        }

        auto reg = ResourceRegistry::load(data_dir);
        if (encode->parsed()) {
            auto bytes = as_string(ops::encode(reg, io.read_text(), table, interchange));
            io.write_bytes(hex ? to_hex(bytes) + "\n" : bytes);
        } else if (decode->parsed()) {
            auto bytes = io.read_bytes();
            if (hex)
                bytes = from_hex(bytes);
            io.write_line(ops::decode(reg, as_bytes(bytes), table, interchange, lossy));
        } else if (conv->parsed()) {
            auto bytes = io.read_bytes();
            io.write_bytes(as_string(ops::convert(as_bytes(bytes), direction == "interchange")));
        } else if (translit->parsed()) {
            io.write_line(ops::translit(reg, io.read_text(), from, to, parse_fallback(fallback), table));
        } else if (render->parsed()) {
            io.write_bytes(ops::render(reg, io.read_text(), parse_glyph_size(size), rules));
        } else if (coverage->parsed()) {
            io.write_line(ops::to_json(ops::coverage(reg, io.read_bytes(), table)).dump(2));
        } else if (ime->parsed()) {
            run_ime(reg.ime(language), in, out);
        } else if (gloss->parsed()) {
            io.write_line(ops::gloss(reg, pair, io.read_text()));
        } else if (list->parsed()) {
            out << (as_json ? ops::to_json(reg).dump(2) + "\n" : describe_resources(reg));
        } else if (serve_cmd->parsed()) {
            config.idle_timeout = std::chrono::minutes(idle_minutes);
            err << "listening on " << config.host << ":" << config.port << "\n";
            if (!serve(reg, config)) {
                err << "akshar: cannot listen on " << config.host << ":" << config.port << "\n";
                return 1;
            }
        }
    } catch (const Error& e) {
        err << "akshar: " << e.what() << "\n";
        return e.kind() == ErrorKind::BadRequest ? 2 : 1;
    }
    return 0;
}

}  // namespace akshar
