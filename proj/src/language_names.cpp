// English names from the ISO 639-1 code table. Entries listing alternative
// names ("Catalan, Valencian") are split so each alternative is accepted.

#include <algorithm>
#include <array>
#include <string>
#include <string_view>
#include <unordered_set>

#include "heds/validate.hpp"
#include "text_util.hpp"

namespace heds {

namespace {

constexpr std::string_view kIso639Names[] = {
    "Abkhazian",
    "Afar",
    "Afrikaans",
    "Akan",
    "Albanian",
    "Amharic",
    "Arabic",
    "Aragonese",
    "Armenian",
    "Assamese",
    "Avaric",
    "Avestan",
    "Aymara",
    "Azerbaijani",
    "Bambara",
    "Bashkir",
    "Basque",
    "Belarusian",
    "Bengali",
    "Bislama",
    "Bosnian",
    "Breton",
    "Bulgarian",
    "Burmese",
    "Catalan, Valencian",
    "Chamorro",
    "Chechen",
    "Chichewa, Chewa, Nyanja",
    "Chinese",
    "Church Slavonic, Old Slavonic, Old Church Slavonic",
    "Chuvash",
    "Cornish",
    "Corsican",
    "Cree",
    "Croatian",
    "Czech",
    "Danish",
    "Divehi, Dhivehi, Maldivian",
    "Dutch, Flemish",
    "Dzongkha",
    "English",
    "Esperanto",
    "Estonian",
    "Ewe",
    "Faroese",
    "Fijian",
    "Finnish",
    "French",
    "Western Frisian",
    "Fulah",
    "Gaelic, Scottish Gaelic",
    "Galician",
    "Ganda",
    "Georgian",
    "German",
    "Greek, Modern Greek",
    "Kalaallisut, Greenlandic",
    "Guarani",
    "Gujarati",
    "Haitian, Haitian Creole",
    "Hausa",
    "Hebrew",
    "Herero",
    "Hindi",
    "Hiri Motu",
    "Hungarian",
    "Icelandic",
    "Ido",
    "Igbo",
    "Indonesian",
    "Interlingua (International Auxiliary Language Association), Interlingua",
    "Interlingue, Occidental",
    "Inuktitut",
    "Inupiaq",
    "Irish",
    "Italian",
    "Japanese",
    "Javanese",
    "Kannada",
    "Kanuri",
    "Kashmiri",
    "Kazakh",
    "Central Khmer, Khmer",
    "Kikuyu, Gikuyu",
    "Kinyarwanda",
    "Kirghiz, Kyrgyz",
    "Komi",
    "Kongo",
    "Korean",
    "Kuanyama, Kwanyama",
    "Kurdish",
    "Lao",
    "Latin",
    "Latvian",
    "Limburgan, Limburger, Limburgish",
    "Lingala",
    "Lithuanian",
    "Luba-Katanga",
    "Luxembourgish, Letzeburgesch",
    "Macedonian",
    "Malagasy",
    "Malay",
    "Malayalam",
    "Maltese",
    "Manx",
    "Maori",
    "Marathi",
    "Marshallese",
    "Mongolian",
    "Nauru",
    "Navajo, Navaho",
    "North Ndebele",
    "South Ndebele",
    "Ndonga",
    "Nepali",
    "Norwegian",
    "Norwegian Bokmål",
    "Norwegian Nynorsk",
    "Sichuan Yi, Nuosu",
    "Occitan",
    "Ojibwa",
    "Oriya",
    "Oromo",
    "Ossetian, Ossetic",
    "Pali",
    "Pashto, Pushto",
    "Persian",
    "Polish",
    "Portuguese",
    "Punjabi, Panjabi",
    "Quechua",
    "Romanian, Moldavian, Moldovan",
    "Romansh",
    "Rundi",
    "Russian",
    "Northern Sami",
    "Samoan",
    "Sango",
    "Sanskrit",
    "Sardinian",
    "Serbian",
    "Shona",
    "Sindhi",
    "Sinhala, Sinhalese",
    "Slovak",
    "Slovenian",
    "Somali",
    "Southern Sotho",
    "Spanish, Castilian",
    "Sundanese",
    "Swahili",
    "Swati",
    "Swedish",
    "Tagalog",
    "Tahitian",
    "Tajik",
    "Tamil",
    "Tatar",
    "Telugu",
    "Thai",
    "Tibetan",
    "Tigrinya",
    "Tonga (Tonga Islands), Tonga",
    "Tsonga",
    "Tswana",
    "Turkish",
    "Turkmen",
    "Twi",
    "Uighur, Uyghur",
    "Ukrainian",
    "Urdu",
    "Uzbek",
    "Venda",
    "Vietnamese",
    "Volapük",
    "Walloon",
    "Welsh",
    "Wolof",
    "Xhosa",
    "Yiddish",
    "Yoruba",
    "Zhuang, Chuang",
    "Zulu",
};

const std::unordered_set<std::string>& name_table() {
  static const auto table = [] {
    std::unordered_set<std::string> names;
    for (auto entry : kIso639Names) {
      std::size_t start = 0;
      while (start <= entry.size()) {
        auto comma = entry.find(',', start);
        if (comma == std::string_view::npos) {
          comma = entry.size();
        }
        names.insert(detail::to_lower(detail::trim(entry.substr(start, comma - start))));
        start = comma + 1;
      }
    }
    return names;
  }();
  return table;
}

}  // namespace

bool is_iso639_language_name(std::string_view name) {
  return name_table().contains(detail::to_lower(detail::trim(name)));
}

std::vector<std::string> unknown_language_names(std::string_view answer) {
  // Separators: ',', ';', '/', newline, and the word "and".
  std::string normalized;
  for (char c : answer) {
    normalized += (c == ';' || c == '/' || c == '\n') ? ',' : c;
  }
  std::vector<std::string> items;
  std::string current;
  std::size_t i = 0;
  const std::string lower = detail::to_lower(normalized);
  while (i < normalized.size()) {
    const bool word_start = i == 0 || detail::is_space(normalized[i - 1]);
    if (word_start && lower.compare(i, 4, "and ") == 0) {
      items.push_back(current);
      current.clear();
      i += 4;
      continue;
    }
    if (normalized[i] == ',') {
      items.push_back(current);
      current.clear();
    } else {
      current += normalized[i];
    }
    ++i;
  }
  items.push_back(current);

  std::vector<std::string> unknown;
  for (const auto& raw : items) {
    auto name = detail::trim(raw);
    if (!name.empty() && name.back() == '.') {
      name.remove_suffix(1);
    }
    if (name.empty()) {
      continue;
    }
    if (!is_iso639_language_name(name)) {
      unknown.emplace_back(name);
    }
  }
  return unknown;
}

}  // namespace heds
