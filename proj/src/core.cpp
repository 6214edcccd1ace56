#include "subnum/core.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <unordered_map>

namespace subnum {

struct Substitution::Data {
    std::vector<std::string> names;
    std::unordered_map<std::string, std::uint32_t> index_of;
    std::vector<Word> images;
    std::size_t max_image = 0;
    std::vector<bool> growing;

    // rows[k][a] = |eta^k(a)|. Extend-only; deque keeps rows stable.
    mutable std::mutex cache_mu;
    mutable std::deque<std::vector<Position>> rows;

    const std::vector<Position>& row(std::size_t k) const {
        std::lock_guard lock(cache_mu);
        while (rows.size() <= k) {
            const std::vector<Position>& prev = rows.back();
            std::vector<Position> next(names.size());
            for (std::size_t a = 0; a < names.size(); ++a) {
                Position sum = 0;
                for (Letter c : images[a]) sum += prev[c.index];
                next[a] = std::move(sum);
            }
            rows.push_back(std::move(next));
        }
        return rows[k];
    }
};

namespace {

constexpr std::string_view kForbiddenInName = "|->,";

bool valid_letter_name(std::string_view tok) {
    if (tok.empty()) return false;
    for (char c : tok) {
        if (std::isspace(static_cast<unsigned char>(c))) return false;
        if (kForbiddenInName.find(c) != std::string_view::npos) return false;
    }
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

// Growing-letter detection on the occurrence graph (edge a -> b iff b
// occurs in eta(a)): a is growing iff it reaches a letter c that lies on a
// cycle and satisfies |eta^{|A|}(c)| >= 2. Length-1 chains are eventually
// periodic within |A| steps, so the |A|-th length row decides expansion
// exactly.
std::vector<bool> detect_growing(const std::vector<Word>& images,
                                 const std::vector<Position>& row_A) {
    const std::size_t n = images.size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a)
        for (Letter c : images[a]) reach[a][c.index] = true;
    // transitive closure; alphabets are small
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (reach[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (reach[k][j]) reach[i][j] = true;

    std::vector<bool> target(n, false);
    for (std::size_t c = 0; c < n; ++c)
        target[c] = reach[c][c] && row_A[c] >= 2;

    std::vector<bool> growing(n, false);
    for (std::size_t a = 0; a < n; ++a) {
        if (target[a]) { growing[a] = true; continue; }
        for (std::size_t c = 0; c < n; ++c)
            if (reach[a][c] && target[c]) { growing[a] = true; break; }
    }
    return growing;
}

}  // namespace

Substitution Substitution::parse(std::string_view config_text) {
    auto data = std::make_shared<Data>();

    // First pass: collect rules, intern left-hand letters in rule order.
    std::vector<std::string_view> rule_rhs;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= config_text.size()) {
        std::size_t eol = config_text.find('\n', pos);
        if (eol == std::string_view::npos) eol = config_text.size();
        std::string_view line = config_text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        std::size_t arrow = line.find("->");
        if (arrow == std::string_view::npos)
            throw Error("line " + std::to_string(line_no) + ": expected 'letter -> image'");
        std::string_view lhs = trim(line.substr(0, arrow));
        std::string_view rhs = trim(line.substr(arrow + 2));
        if (!valid_letter_name(lhs))
            throw Error("line " + std::to_string(line_no) + ": invalid letter name '" +
                        std::string(lhs) + "'");
        std::string name(lhs);
        if (data->index_of.contains(name))
            throw Error("duplicate rule for letter '" + name + "'");
        data->index_of.emplace(name, static_cast<std::uint32_t>(data->names.size()));
        data->names.push_back(std::move(name));
        rule_rhs.push_back(rhs);
    }
    if (data->names.empty()) throw Error("no rules in substitution config");

    // Second pass: resolve images now that the alphabet is known.
    for (std::size_t a = 0; a < data->names.size(); ++a) {
        Word img;
        for (std::string_view chunk : split_ws(rule_rhs[a])) {
            if (auto it = data->index_of.find(std::string(chunk)); it != data->index_of.end()) {
                img.push_back(Letter{it->second});
                continue;
            }
            // run of juxtaposed single-character letters
            for (char c : chunk) {
                auto it = data->index_of.find(std::string(1, c));
                if (it == data->index_of.end())
                    throw Error("unknown letter '" + std::string(chunk) + "' in image of '" +
                                data->names[a] + "'");
                img.push_back(Letter{it->second});
            }
        }
        if (img.empty()) throw Error("empty image for letter '" + data->names[a] + "'");
        data->max_image = std::max(data->max_image, img.size());
        data->images.push_back(std::move(img));
    }

    data->rows.emplace_back(data->names.size(), Position(1));
    data->growing = detect_growing(data->images, data->row(data->names.size()));
    if (std::none_of(data->growing.begin(), data->growing.end(), [](bool g) { return g; }))
        throw Error("no growing letter");

    return Substitution(std::move(data));
}

Substitution::Substitution(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

std::size_t Substitution::alphabet_size() const { return data_->names.size(); }

const std::string& Substitution::letter_name(Letter a) const {
    if (a.index >= data_->names.size()) throw Error("letter index out of range");
    return data_->names[a.index];
}

std::optional<Letter> Substitution::find_letter(std::string_view name) const {
    auto it = data_->index_of.find(std::string(name));
    if (it == data_->index_of.end()) return std::nullopt;
    return Letter{it->second};
}

Letter Substitution::letter(std::string_view name) const {
    if (auto a = find_letter(name)) return *a;
    throw Error("unknown letter '" + std::string(name) + "'");
}

const Word& Substitution::image(Letter a) const {
    if (a.index >= data_->images.size()) throw Error("letter index out of range");
    return data_->images[a.index];
}

std::size_t Substitution::max_image_size() const { return data_->max_image; }

Word Substitution::apply(const Word& w) const {
    Word out;
    for (Letter a : w) {
        const Word& img = image(a);
        out.insert(out.end(), img.begin(), img.end());
    }
    return out;
}

Word Substitution::apply_power(const Word& w, unsigned k) const {
    Word out = w;
    for (unsigned i = 0; i < k; ++i) out = apply(out);
    return out;
}

const Position& Substitution::image_length(Letter a, std::size_t k) const {
    return length_row(k)[a.index];
}

const std::vector<Position>& Substitution::length_row(std::size_t k) const {
    return data_->row(k);
}

bool Substitution::is_growing(Letter a) const {
    if (a.index >= data_->growing.size()) throw Error("letter index out of range");
    return data_->growing[a.index];
}

std::vector<Letter> Substitution::growing_letters() const {
    std::vector<Letter> out;
    for (std::uint32_t i = 0; i < data_->growing.size(); ++i)
        if (data_->growing[i]) out.push_back(Letter{i});
    return out;
}

std::string Substitution::word_string(const Word& w) const {
    bool all_single = std::all_of(data_->names.begin(), data_->names.end(),
                                  [](const std::string& n) { return n.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!all_single && i > 0) out += ' ';
        out += letter_name(w[i]);
    }
    return out;
}

bool Substitution::operator==(const Substitution& other) const {
    if (data_ == other.data_) return true;
    return data_->names == other.data_->names && data_->images == other.data_->images;
}

}  // namespace subnum
