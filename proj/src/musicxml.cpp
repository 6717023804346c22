#include "scoregen/musicxml.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>

#include "scoregen/xml.hpp"
#include "scoregen/zip.hpp"

namespace scoregen {

namespace {

struct RawEvent {
    NoteEvent event;
    bool tie_start = false;
    bool tie_stop = false;
    long line = 0;
};

struct PartState {
    std::string id;
    std::string instrument;
    std::vector<RawEvent> events;
};

class Parser {
public:
    ParseResult run(const XmlElement& root) {
        if (root.name != "score-partwise")
            throw ParseError("expected <score-partwise> root, found <" + root.name + ">",
                             root.line, 0);
        parse_part_list(root.require_child("part-list"));
        for (const auto* part_el : root.children_named("part")) parse_part(*part_el);
        return finish();
    }

private:
    void parse_part_list(const XmlElement& part_list) {
        for (const auto* sp : part_list.children_named("score-part")) {
            PartState ps;
            ps.id = sp->attribute("id");
            if (ps.id.empty()) throw ParseError("<score-part> without id", sp->line, 0);
            const XmlElement* name = sp->child("part-name");
            ps.instrument = name ? name->trimmed_text() : ps.id;
            if (ps.instrument.empty()) ps.instrument = ps.id;
            order_.push_back(ps.id);
            parts_.emplace(ps.id, std::move(ps));
        }
        if (order_.empty()) throw ParseError("<part-list> has no parts", part_list.line, 0);
    }

    void parse_part(const XmlElement& part_el) {
        std::string id(part_el.attribute("id"));
        auto it = parts_.find(id);
        if (it == parts_.end())
            throw ParseError("<part id=\"" + id + "\"> not declared in <part-list>", part_el.line,
                             0);
        PartState& ps = it->second;

        long divisions = 1;
        Fraction pos = 0;
        for (const auto* measure : part_el.children_named("measure")) {
            Fraction max_end = pos;
            std::size_t anchor_index = SIZE_MAX;  // last non-chord pitched note
            for (const auto& child : measure->children) {
                if (child.name == "attributes") {
                    parse_attributes(child, divisions);
                } else if (child.name == "note") {
                    parse_note(child, ps, divisions, pos, anchor_index);
                    if (pos > max_end) max_end = pos;
                } else if (child.name == "backup") {
                    pos -= read_duration(child, divisions);
                    anchor_index = SIZE_MAX;
                } else if (child.name == "forward") {
                    pos += read_duration(child, divisions);
                    if (pos > max_end) max_end = pos;
                } else if (child.name == "direction") {
                    parse_direction(child);
                } else if (child.name == "barline" || child.name == "print" ||
                           child.name == "sound") {
                    // structural / layout only
                } else {
                    warn_once("skipped <" + child.name + "> elements");
                }
            }
            pos = max_end;
        }
    }

    void parse_attributes(const XmlElement& attrs, long& divisions) {
        if (const auto* div = attrs.child("divisions")) {
            divisions = div->int_text();
            if (divisions <= 0) throw ParseError("<divisions> must be positive", div->line, 0);
        }
        if (const auto* key = attrs.child("key")) {
            if (const auto* fifths = key->child("fifths"); fifths && !saw_key_) {
                score_.key_fifths = static_cast<int>(fifths->int_text());
                saw_key_ = true;
            }
        }
        if (const auto* time = attrs.child("time"); time && !saw_time_) {
            const auto* beats = time->child("beats");
            const auto* beat_type = time->child("beat-type");
            if (beats && beat_type) {
                score_.time_beats = static_cast<int>(beats->int_text());
                score_.time_beat_type = static_cast<int>(beat_type->int_text());
                saw_time_ = true;
            }
        }
    }

    void parse_direction(const XmlElement& direction) {
        for (const auto& child : direction.children) {
            if (child.name == "sound") {
                std::string_view tempo = child.attribute("tempo");
                if (!tempo.empty() && !score_.tempo_bpm) {
                    int bpm = static_cast<int>(Fraction::parse(tempo).to_double());
                    if (bpm > 0) score_.tempo_bpm = bpm;
                }
            } else if (child.name == "direction-type") {
                for (const auto& dt : child.children)
                    if (dt.name == "dynamics" || dt.name == "wedge")
                        warn_once("skipped dynamics markings");
            }
        }
    }

    Fraction read_duration(const XmlElement& el, long divisions) {
        const XmlElement& dur = el.require_child("duration");
        long units = dur.int_text();
        if (units < 0) throw ParseError("negative <duration>", dur.line, 0);
        return Fraction(units, divisions);
    }

    void parse_note(const XmlElement& note, PartState& ps, long divisions, Fraction& pos,
                    std::size_t& anchor_index) {
        if (note.has_child("grace")) {
            warnings_.push_back("line " + std::to_string(note.line) + ": skipped grace note");
            return;
        }
        if (note.has_child("cue")) {
            warnings_.push_back("line " + std::to_string(note.line) + ": skipped cue note");
            return;
        }
        for (const char* noisy : {"notations", "lyric"})
            if (note.has_child(noisy)) warn_once(std::string("skipped <") + noisy + "> details");

        Fraction dur = read_duration(note, divisions);
        if (!(dur > Fraction(0)))
            throw ParseError("note with zero duration", note.line, 0);

        bool is_rest = note.has_child("rest");
        bool is_chord_member = note.has_child("chord");

        bool tie_start = false, tie_stop = false;
        for (const auto* tie : note.children_named("tie")) {
            std::string_view type = tie->attribute("type");
            if (type == "start") tie_start = true;
            if (type == "stop") tie_stop = true;
        }

        if (is_rest) {
            RawEvent re;
            re.event = make_event({}, dur, pos, part_index_of(ps.id));
            re.line = note.line;
            ps.events.push_back(std::move(re));
            anchor_index = SIZE_MAX;
            pos += dur;
            return;
        }

        Pitch pitch = parse_pitch_element(note);

        if (is_chord_member) {
            if (anchor_index == SIZE_MAX)
                throw ParseError("<chord/> note without a preceding note", note.line, 0);
            RawEvent& anchor = ps.events[anchor_index];
            if (anchor.event.duration != dur)
                warnings_.push_back("line " + std::to_string(note.line) +
                                    ": chord note duration differs; using first note's");
            auto pitches = anchor.event.pitches;
            pitches.push_back(pitch);
            anchor.event = make_event(std::move(pitches), anchor.event.duration,
                                      anchor.event.offset, anchor.event.part_index);
            anchor.tie_start = anchor.tie_start || tie_start;
            anchor.tie_stop = anchor.tie_stop || tie_stop;
            return;
        }

        RawEvent re;
        re.event = make_event({pitch}, dur, pos, part_index_of(ps.id));
        re.tie_start = tie_start;
        re.tie_stop = tie_stop;
        re.line = note.line;
        ps.events.push_back(std::move(re));
        anchor_index = ps.events.size() - 1;
        pos += dur;
    }

    Pitch parse_pitch_element(const XmlElement& note) {
        const XmlElement& pitch_el = note.require_child("pitch");
        Pitch p;
        std::string step = pitch_el.require_child("step").trimmed_text();
        if (step.size() != 1)
            throw ParseError("bad <step> '" + step + "'", pitch_el.line, 0);
        p.step = step[0];
        if (const auto* alter = pitch_el.child("alter"))
            p.alter = static_cast<int>(alter->int_text());
        p.octave = static_cast<int>(pitch_el.require_child("octave").int_text());
        try {
            validate_pitch(p);
        } catch (const ValidationError& e) {
            throw ParseError(e.what(), pitch_el.line, 0);
        }
        return p;
    }

    int part_index_of(const std::string& id) const {
        for (std::size_t i = 0; i < order_.size(); ++i)
            if (order_[i] == id) return static_cast<int>(i);
        return 0;
    }

    void warn_once(const std::string& message) {
        if (seen_warnings_.insert(message).second) warnings_.push_back(message);
    }

    // Merges tied runs into single events. A tie connects an event carrying
    // tie-start to the event with equal pitches that begins exactly where it
    // ends; chains collapse left to right.
    static std::vector<NoteEvent> merge_ties(std::vector<RawEvent> raw,
                                             std::vector<std::string>& warnings) {
        std::stable_sort(raw.begin(), raw.end(), [](const RawEvent& a, const RawEvent& b) {
            return a.event.offset < b.event.offset;
        });
        for (std::size_t i = 0; i < raw.size(); ++i) {
            while (raw[i].tie_start) {
                Fraction end = raw[i].event.offset + raw[i].event.duration;
                std::size_t j = i + 1;
                for (; j < raw.size(); ++j) {
                    if (raw[j].tie_stop && raw[j].event.offset == end &&
                        raw[j].event.pitches == raw[i].event.pitches)
                        break;
                }
                if (j == raw.size()) {
                    warnings.push_back("line " + std::to_string(raw[i].line) +
                                       ": unterminated tie");
                    break;
                }
                raw[i].event.duration += raw[j].event.duration;
                raw[i].tie_start = raw[j].tie_start;
                raw.erase(raw.begin() + static_cast<std::ptrdiff_t>(j));
            }
        }
        std::vector<NoteEvent> events;
        events.reserve(raw.size());
        for (auto& re : raw) events.push_back(std::move(re.event));
        return events;
    }

    ParseResult finish() {
        for (const auto& id : order_) {
            PartState& ps = parts_.at(id);
            Part part;
            part.instrument = ps.instrument;
            part.events = merge_ties(std::move(ps.events), warnings_);
            score_.parts.push_back(std::move(part));
        }
        validate_score(score_);
        return ParseResult{std::move(score_), std::move(warnings_)};
    }

    Score score_;
    std::vector<std::string> warnings_;
    std::set<std::string> seen_warnings_;
    std::map<std::string, PartState> parts_;
    std::vector<std::string> order_;
    bool saw_key_ = false;
    bool saw_time_ = false;
};

std::string extract_mxl_root(std::string_view bytes) {
    ZipArchive zip = ZipArchive::from_bytes(bytes);
    if (!zip.contains("META-INF/container.xml"))
        throw ParseError("mxl archive has no META-INF/container.xml");
    XmlElement container = parse_xml(zip.read("META-INF/container.xml"));
    const XmlElement* rootfiles = container.child("rootfiles");
    const XmlElement* rootfile = rootfiles ? rootfiles->child("rootfile") : nullptr;
    if (!rootfile) throw ParseError("container.xml has no <rootfile>", container.line, 0);
    std::string path(rootfile->attribute("full-path"));
    if (path.empty()) throw ParseError("<rootfile> without full-path", rootfile->line, 0);
    if (!zip.contains(path))
        throw DataError("mxl archive is missing its root score '" + path + "'");
    return zip.read(path);
}

}  // namespace

ScoreFormat detect_format(std::string_view bytes) {
    if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == 'K') return ScoreFormat::mxl;
    return ScoreFormat::musicxml;
}

ParseResult parse_score(std::string_view bytes, ScoreFormat format) {
    std::string xml_bytes;
    if (format == ScoreFormat::mxl) {
        xml_bytes = extract_mxl_root(bytes);
        bytes = xml_bytes;
    }
    XmlElement root = parse_xml(bytes);
    Parser parser;
    return parser.run(root);
}

namespace {

long to_divisions(const Fraction& quarter_lengths, const std::string& what) {
    Fraction scaled = quarter_lengths * Fraction(kDivisionsPerQuarter);
    if (!scaled.is_integer())
        throw SerializationError(what + " of " + quarter_lengths.str() +
                                 " quarter-lengths is not an integer number of divisions");
    return scaled.num();
}

void write_note(std::ostringstream& out, const NoteEvent& ev, long dur_divisions) {
    if (ev.is_rest()) {
        out << "      <note>\n        <rest/>\n        <duration>" << dur_divisions
            << "</duration>\n      </note>\n";
        return;
    }
    for (std::size_t i = 0; i < ev.pitches.size(); ++i) {
        const Pitch& p = ev.pitches[i];
        out << "      <note>\n";
        if (i > 0) out << "        <chord/>\n";
        out << "        <pitch>\n          <step>" << p.step << "</step>\n";
        if (p.alter != 0) out << "          <alter>" << p.alter << "</alter>\n";
        out << "          <octave>" << p.octave << "</octave>\n        </pitch>\n"
            << "        <duration>" << dur_divisions << "</duration>\n      </note>\n";
    }
}

}  // namespace

std::string write_musicxml(const Score& score) {
    validate_score(score);
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<!DOCTYPE score-partwise PUBLIC \"-//Recordare//DTD MusicXML 3.1 Partwise//EN\" "
           "\"http://www.musicxml.org/dtds/partwise.dtd\">\n"
        << "<score-partwise version=\"3.1\">\n  <part-list>\n";
    for (std::size_t i = 0; i < score.parts.size(); ++i) {
        out << "    <score-part id=\"P" << i + 1 << "\">\n      <part-name>"
            << xml_escape(score.parts[i].instrument) << "</part-name>\n    </score-part>\n";
    }
    out << "  </part-list>\n";

    for (std::size_t pi = 0; pi < score.parts.size(); ++pi) {
        const Part& part = score.parts[pi];
        // The whole part goes into a single measure; cursor corrections via
        // backup/forward keep arbitrary offsets representable exactly.
        out << "  <part id=\"P" << pi + 1 << "\">\n    <measure number=\"1\">\n"
            << "      <attributes>\n        <divisions>" << kDivisionsPerQuarter
            << "</divisions>\n        <key>\n          <fifths>" << score.key_fifths
            << "</fifths>\n          <mode>major</mode>\n        </key>\n"
            << "        <time>\n          <beats>" << score.time_beats
            << "</beats>\n          <beat-type>" << score.time_beat_type
            << "</beat-type>\n        </time>\n      </attributes>\n";
        if (pi == 0 && score.tempo_bpm)
            out << "      <direction>\n        <sound tempo=\"" << *score.tempo_bpm
                << "\"/>\n      </direction>\n";

        long cursor = 0;  // in divisions
        for (std::size_t ei = 0; ei < part.events.size(); ++ei) {
            const NoteEvent& ev = part.events[ei];
            std::string where =
                "part " + std::to_string(pi + 1) + " event " + std::to_string(ei + 1);
            long start = to_divisions(ev.offset, where + " offset");
            long dur = to_divisions(ev.duration, where + " duration");
            if (start > cursor)
                out << "      <forward>\n        <duration>" << start - cursor
                    << "</duration>\n      </forward>\n";
            else if (start < cursor)
                out << "      <backup>\n        <duration>" << cursor - start
                    << "</duration>\n      </backup>\n";
            write_note(out, ev, dur);
            cursor = start + dur;
        }
        out << "    </measure>\n  </part>\n";
    }
    out << "</score-partwise>\n";
    return out.str();
}

}  // namespace scoregen
