// The HEDS 1.0 question tree. Prompts and option labels are the form's own
// wording with LaTeX markup reduced to plain text.

#include "heds/schema.hpp"

namespace heds {

namespace {

using Options = std::vector<OptionDef>;
using Sentinels = std::vector<Sentinel>;

Question text_question(std::string id, std::string prompt, std::string help,
                       Sentinels sentinels = {}) {
  return Question{std::move(id), std::move(prompt), QuestionKind::kFreeText, {},
                  std::move(sentinels), std::move(help)};
}

Question integer_question(std::string id, std::string prompt, std::string help,
                          Sentinels sentinels = {}) {
  return Question{std::move(id), std::move(prompt), QuestionKind::kIntegerText, {},
                  std::move(sentinels), std::move(help)};
}

Question single_choice(std::string id, std::string prompt, Options options, std::string help = {}) {
  return Question{std::move(id), std::move(prompt), QuestionKind::kSingleChoice,
                  std::move(options), {}, std::move(help)};
}

Question multi_choice(std::string id, std::string prompt, Options options, std::string help = {}) {
  return Question{std::move(id), std::move(prompt), QuestionKind::kMultiChoice,
                  std::move(options), {}, std::move(help)};
}

OptionDef opt(std::string key, std::string label) {
  return OptionDef{std::move(key), std::move(label), false};
}

OptionDef other_opt(std::string label = "other (please specify)") {
  return OptionDef{"other", std::move(label), true};
}

// Shared by the input (2.1) and output (2.2) type lists.
Options io_types_before_text_other() {
  return {
      opt("raw-structured-data", "raw/structured data"),
      opt("dlr", "deep linguistic representation (DLR)"),
      opt("slr", "shallow linguistic representation (SLR)"),
      opt("text-subsentential", "text: subsentential unit of text"),
      opt("text-sentence", "text: sentence"),
      opt("text-multiple-sentences", "text: multiple sentences"),
      opt("text-document", "text: document"),
      opt("text-dialogue", "text: dialogue"),
      opt("text-other", "text: other"),
      opt("speech", "speech"),
      opt("visual", "visual"),
      opt("multi-modal", "multi-modal"),
  };
}

Part part_paper_and_resources() {
  return Part{
      1,
      "Paper and Resources",
      {
          text_question(
              "1.1",
              "Link to paper reporting the evaluation experiment. If the paper reports more than "
              "one experiment, state which experiment you're completing this sheet for. Or, if "
              "applicable, enter 'for preregistration.'",
              "A link to an online copy of the main reference for the human evaluation experiment, "
              "identifying which of the experiments the form is being completed for if there are "
              "several. If the experiment hasn't been run yet, and the form is being completed for "
              "the purpose of submitting it for preregistration, simply enter 'for "
              "preregistration'.",
              {Sentinel::kForPreregistration}),
          text_question(
              "1.2",
              "Link to website providing resources used in the evaluation experiment (e.g. system "
              "outputs, evaluation tools, etc.). If there isn't one, enter 'N/A'.",
              "Link(s) to any resources used in the evaluation experiment, such as system outputs, "
              "evaluation tools, etc. If there aren't any publicly shared resources (yet), enter "
              "'N/A'.",
              {Sentinel::kNotApplicable}),
          text_question("1.3",
                        "Name, affiliation and email address of person completing this sheet, and "
                        "of contact author if different.",
                        "Names, affiliations and email addresses as appropriate."),
      }};
}

Part part_system() {
  Options inputs = io_types_before_text_other();
  inputs.push_back(opt("control-feature", "control feature"));
  inputs.push_back(opt("no-input-human-generation", "no input (human generation)"));
  inputs.push_back(other_opt());

  Options outputs = io_types_before_text_other();
  outputs.push_back(opt("human-generated-outputs", "human-generated 'outputs'"));
  outputs.push_back(other_opt());

  Options tasks = {
      opt("content-selection", "content selection/determination"),
      opt("content-ordering", "content ordering/structuring"),
      opt("aggregation", "aggregation"),
      opt("referring-expression-generation", "referring expression generation"),
      opt("lexicalisation", "lexicalisation"),
      opt("deep-generation", "deep generation"),
      opt("surface-realisation", "surface realisation (SLR to text)"),
      opt("feature-controlled-generation", "feature-controlled text generation"),
      opt("data-to-text", "data-to-text generation"),
      opt("dialogue-turn-generation", "dialogue turn generation"),
      opt("question-generation", "question generation"),
      opt("question-answering", "question answering"),
      opt("paraphrasing", "paraphrasing/lossless simplification"),
      opt("compression", "compression/lossy simplification"),
      opt("machine-translation", "machine translation"),
      opt("summarisation", "summarisation (text-to-text)"),
      opt("end-to-end-generation", "end-to-end text generation"),
      opt("image-video-description", "image/video description"),
      opt("post-editing", "post-editing/correction"),
      other_opt(),
  };

  return Part{
      2,
      "Evaluated System",
      {
          multi_choice("2.1",
                       "What type of input do the evaluated system(s) take? Select all that apply. "
                       "If none match, select 'Other' and describe.",
                       std::move(inputs),
                       "Describe the type of input, where input refers to the representations "
                       "and/or data structures shared by all evaluated systems. This question is "
                       "about input type, regardless of number. E.g. if the input is a set of "
                       "documents, you would still select text: document below."),
          // The guidance text repeats the wording of 2.1; kept as published.
          multi_choice("2.2",
                       "What type of output do the evaluated system(s) generate? Select all that "
                       "apply. If none match, select 'Other' and describe.",
                       std::move(outputs),
                       "Describe the type of input, where input refers to the representations "
                       "and/or data structures shared by all evaluated systems. This question is "
                       "about input type, regardless of number. E.g. if the output is a set of "
                       "documents, you would still select text: document below. Note that the "
                       "options for outputs are the same as for inputs minus the control feature "
                       "option."),
          multi_choice("2.3",
                       "How would you describe the task that the evaluated system(s) perform in "
                       "mapping the inputs in Q2.1 to the outputs in Q2.2? Occasionally, more than "
                       "one of the options below may apply. If none match, select 'Other' and "
                       "describe.",
                       std::move(tasks),
                       "This field records the task performed by the system(s) being evaluated. "
                       "This is independent of the application domain (financial reporting, "
                       "weather forecasting, etc.), or the specific method (rule-based, neural, "
                       "etc.) implemented in the system. We indicate mutual constraints between "
                       "inputs, outputs and task for some of the options below."),
          text_question("2.4", "Input Language(s), or 'N/A'.",
                        "Any language name(s) that apply, mapped to standardised full language "
                        "names in ISO 639-1. E.g. English, Herero, Hindi. If no language is "
                        "accepted as (part of) the input, enter 'N/A'.",
                        {Sentinel::kNotApplicable}),
          text_question("2.5", "Output Language(s), or 'N/A'.",
                        "Any language name(s) that apply, mapped to standardised full language "
                        "names in ISO 639-1 (2019). E.g. English, Herero, Hindi. If no language is "
                        "generated, enter 'N/A'.",
                        {Sentinel::kNotApplicable}),
      }};
}

Part part_design() {
  return Part{
      3,
      "Output Sample, Evaluators and Experimental Design",
      {
          integer_question(
              "3.1.1",
              "How many system outputs (or other evaluation items) are evaluated per system in the "
              "evaluation experiment? Answer should be an integer.",
              "The number of system outputs (or other evaluation items) that are evaluated per "
              "system by at least one evaluator in the experiment, as an integer."),
          single_choice(
              "3.1.2",
              "How are system outputs (or other evaluation items) selected for inclusion in the "
              "evaluation experiment? If none match, select 'Other' and describe.",
              {
                  opt("automatic-random", "by an automatic random process from a larger set"),
                  opt("automatic-stratified",
                      "by an automatic random process but using stratified sampling over given "
                      "properties"),
                  opt("manual-arbitrary", "by manual, arbitrary selection"),
                  opt("manual-balanced",
                      "by manual selection aimed at achieving balance or variety relative to "
                      "given properties"),
                  other_opt("Other (please specify)"),
              }),
          text_question("3.1.3", "What is the statistical power of the sample size?",
                        "The results of a statistical power calculation on the output sample: "
                        "provide numerical results and a link to the script used (or another way "
                        "of identifying the script)."),
          integer_question(
              "3.2.1",
              "How many evaluators are there in this experiment? Answer should be an integer.",
              "The total number of evaluators participating in the experiment, as an integer."),
          multi_choice(
              "3.2.2",
              "What kind of evaluators are in this experiment? Select all that apply. If none "
              "match, select 'Other' and describe. In all cases, provide details in the text box "
              "under 'Other'.",
              {
                  opt("experts", "experts"),
                  opt("non-experts", "non-experts"),
                  opt("paid", "paid (including non-monetary compensation such as course credits)"),
                  opt("not-paid", "not paid"),
                  opt("previously-known", "previously known to authors"),
                  opt("not-previously-known", "not previously known to authors"),
                  opt("includes-authors", "evaluators include one or more of the authors"),
                  opt("excludes-authors", "evaluators do not include any of the authors"),
                  other_opt("Other (fewer than 4 of the above apply)"),
              },
              "We believe you should be able to tick 4 options of the above. If that's not the "
              "case, use the box under 'Other' to explain."),
          text_question(
              "3.2.3", "How are evaluators recruited?",
              "Please explain how your evaluators are recruited. Do you send emails to a given "
              "list? Do you post invitations on social media? Posters on university walls? Were "
              "there any gatekeepers involved? What are the exclusion/inclusion criteria?"),
          text_question(
              "3.2.4",
              "What training and/or practice are evaluators given before starting on the "
              "evaluation itself?",
              "Use this space to describe any training evaluators were given as part of the "
              "experiment to prepare them for the evaluation task, including any practice "
              "evaluations they did. This includes any introductory explanations they're given, "
              "e.g. on the start page of an online evaluation tool."),
          text_question(
              "3.2.5",
              "What other characteristics do the evaluators have, known either because these were "
              "qualifying criteria, or from information gathered as part of the evaluation?",
              "Use this space to list any characteristics not covered in previous questions that "
              "the evaluators are known to have, either because evaluators were selected on the "
              "basis of a characteristic, or because information about a characteristic was "
              "collected as part of the evaluation. This might include geographic location of IP "
              "address, educational level, or demographic information such as gender, age, etc. "
              "Where characteristics differ among evaluators (e.g. gender, age, location etc.), "
              "also give numbers for each subgroup."),
          text_question("3.3.1",
                        "Has the experimental design been preregistered? If yes, on which "
                        "registry?",
                        "State 'Yes' or 'No'; if 'Yes' also give the name of the registry and a "
                        "link to the registration page for the experiment."),
          text_question("3.3.2",
                        "How are responses collected? E.g. paper forms, online survey tool, etc.",
                        "Use this space to describe how you collected responses, e.g. paper forms, "
                        "Google forms, SurveyMonkey, Mechanical Turk, CrowdFlower, audio/video "
                        "recording, etc."),
          multi_choice(
              "3.3.3",
              "What quality assurance methods are used? Select all that apply. If none match, "
              "select 'Other' and describe. In all cases, provide details in the text box under "
              "'Other'.",
              {
                  opt("native-speakers",
                      "evaluators are required to be native speakers of the language they "
                      "evaluate"),
                  opt("automatic-quality-checking",
                      "automatic quality checking methods are used during/post evaluation"),
                  opt("manual-quality-checking",
                      "manual quality checking methods are used during/post evaluation"),
                  opt("evaluators-excluded",
                      "evaluators are excluded if they fail quality checks (often or badly "
                      "enough)"),
                  opt("evaluations-excluded",
                      "some evaluations are excluded because of failed quality checks"),
                  opt("none-of-the-above", "none of the above"),
                  other_opt("Other (please specify)"),
              }),
          text_question(
              "3.3.4",
              "What do evaluators see when carrying out evaluations? Link to screenshot(s) and/or "
              "describe the evaluation interface(s).",
              "Use this space to describe the interface, paper form, etc. that evaluators see when "
              "they carry out the evaluation. Link to a screenshot/copy if possible. If there is a "
              "separate introductory interface/page, include it under Question 3.2.4."),
          multi_choice(
              "3.3.5",
              "How free are evaluators regarding when and how quickly to carry out evaluations? "
              "Select all that apply. In all cases, provide details in the text box under "
              "'Other'.",
              {
                  opt("time-limit-per-assessment",
                      "evaluators have to complete each individual assessment within a set time"),
                  opt("single-sitting",
                      "evaluators have to complete the whole evaluation in one sitting"),
                  opt("neither", "neither of the above"),
                  other_opt("Other (please specify)"),
              }),
          multi_choice(
              "3.3.6",
              "Are evaluators told they can ask questions about the evaluation and/or provide "
              "feedback? Select all that apply. In all cases, provide details in the text box "
              "under 'Other'.",
              {
                  opt("questions-before",
                      "evaluators are told they can ask any questions during/after receiving "
                      "initial training/instructions, and before the start of the evaluation"),
                  opt("questions-during",
                      "evaluators are told they can ask any questions during the evaluation"),
                  opt("feedback-after",
                      "evaluators are asked for feedback and/or comments after the evaluation, "
                      "e.g. via an exit questionnaire or a comment box"),
                  opt("none-of-the-above", "None of the above"),
                  other_opt("Other (please specify)"),
              }),
          single_choice(
              "3.3.7",
              "What are the experimental conditions in which evaluators carry out the "
              "evaluations? If none match, select 'Other' and describe.",
              {
                  opt("own-choosing",
                      "evaluation carried out by evaluators at a place of their own choosing, e.g. "
                      "online, using a paper form, etc."),
                  opt("lab-same",
                      "evaluation carried out in a lab, and conditions are the same for each "
                      "evaluator"),
                  opt("lab-varied",
                      "evaluation carried out in a lab, and conditions vary for different "
                      "evaluators"),
                  opt("real-life-same",
                      "evaluation carried out in a real-life situation, and conditions are the "
                      "same for each evaluator"),
                  opt("real-life-varied",
                      "evaluation carried out in a real-life situation, and conditions vary for "
                      "different evaluators"),
                  opt("simulated-real-life-same",
                      "evaluation carried out outside of the lab, in a situation designed to "
                      "resemble a real-life situation, and conditions are the same for each "
                      "evaluator"),
                  opt("simulated-real-life-varied",
                      "evaluation carried out outside of the lab, in a situation designed to "
                      "resemble a real-life situation, and conditions vary for different "
                      "evaluators"),
                  other_opt("Other (please specify)"),
              }),
          text_question(
              "3.3.8",
              "Unless the evaluation is carried out at a place of the evaluators' own choosing, "
              "briefly describe the (range of different) conditions in which evaluators carry out "
              "the evaluations.",
              "Use this space to describe the variations in the conditions in which evaluators "
              "carry out the evaluation, for both situations where those variations are "
              "controlled, and situations where they are not controlled."),
      }};
}

Part criterion_block() {
  return Part{
      kCriterionPart,
      "Quality Criterion",
      {
          single_choice("4.1.1", "What type of quality is assessed by the quality criterion?",
                        {opt("correctness", "Correctness"), opt("goodness", "Goodness"),
                         opt("features", "Features")}),
          single_choice("4.1.2", "Which aspect of system outputs is assessed by the quality criterion?",
                        {opt("form", "Form of output"), opt("content", "Content of output"),
                         opt("both", "Both form and content of output")}),
          single_choice(
              "4.1.3",
              "Is each output assessed for quality in its own right, or with reference to a "
              "system-internal or external frame of reference?",
              {opt("own-right", "Quality of output in its own right"),
               opt("relative-to-input", "Quality of output relative to the input"),
               opt("external-frame",
                   "Quality of output relative to a system-external frame of reference")}),
          single_choice("4.2.1",
                        "Does an individual assessment involve an objective or a subjective "
                        "judgment?",
                        {opt("objective", "Objective"), opt("subjective", "Subjective")}),
          single_choice("4.2.2", "Are outputs assessed in absolute or relative terms?",
                        {opt("absolute", "Absolute"), opt("relative", "Relative")}),
          single_choice("4.2.3", "Is the evaluation intrinsic or extrinsic?",
                        {opt("intrinsic", "Intrinsic"), opt("extrinsic", "Extrinsic")}),
          text_question(
              "4.3.1",
              "What do you call the quality criterion in explanations/interfaces to evaluators? "
              "Enter 'N/A' if criterion not named.",
              "The name you use to refer to the quality criterion in explanations and/or "
              "interfaces created for evaluators. Examples of quality criterion names include "
              "Fluency, Clarity, Meaning Preservation. If no name is used, state 'N/A'.",
              {Sentinel::kNotApplicable}),
          text_question(
              "4.3.2",
              "What definition do you give for the quality criterion in explanations/interfaces "
              "to evaluators? Enter 'N/A' if no definition given.",
              "Copy and past the verbatim definition you give to evaluators to explain the "
              "quality criterion they're assessing. If you don't explicitly call it a definition, "
              "enter the nearest thing to a definition you give them. If you don't give any "
              "definition, state 'N/A'.",
              {Sentinel::kNotApplicable}),
          integer_question(
              "4.3.3",
              "Size of scale or other rating instrument (i.e. how many different possible values "
              "there are). Answer should be an integer or 'continuous' (if it's not possible to "
              "state how many possible responses there are). Enter 'N/A' if there is no rating "
              "instrument.",
              "The number of different response values for this quality criterion. E.g. for a "
              "5-point Likert scale, the size to enter is 5. For two-way forced-choice preference "
              "judgments, it is 2; if there's also a no-preference option, enter 3. For a slider "
              "that is mapped to 100 different values for the purpose of recording assessments, "
              "the size to enter is 100. If no rating instrument is used (e.g. when evaluation "
              "gathers post-edits or qualitative feedback only), enter 'N/A'.",
              {Sentinel::kContinuous, Sentinel::kNotApplicable}),
          text_question(
              "4.3.4",
              "List or range of possible values of the scale or other rating instrument. Enter "
              "'N/A', if there is no rating instrument.",
              "List, or give the range of, the possible values of the rating instrument. The list "
              "or range should be of the size specified in Question 4.3.3. If there are too many "
              "to list, use a range. E.g. for two-way forced-choice preference judgments, the list "
              "entered might be A better, B better; if there's also a no-preference option, the "
              "list might be A better, B better, neither. For a slider that is mapped to 100 "
              "different values for the purpose of recording assessments, the range 1--100 might "
              "be entered. If no rating instrument is used (e.g. when evaluation gathers "
              "post-edits or qualitative feedback only), enter 'N/A'.",
              {Sentinel::kNotApplicable}),
          single_choice(
              "4.3.5",
              "How is the scale or other rating instrument presented to evaluators? If none "
              "match, select 'Other' and describe.",
              {
                  opt("multiple-choice", "Multiple-choice options"),
                  opt("check-boxes", "Check-boxes"),
                  opt("slider", "Slider"),
                  opt("na-no-instrument", "N/A (there is no rating instrument)"),
                  other_opt("Other (please specify)"),
              }),
          text_question(
              "4.3.6",
              "If there is no rating instrument, describe briefly what task the evaluators "
              "perform (e.g. ranking multiple outputs, finding information, playing a game, "
              "etc.), and what information is recorded. Enter 'N/A' if there is a rating "
              "instrument.",
              "If (and only if) there is no rating instrument, i.e. you entered 'N/A' for "
              "Questions 4.3.3--4.3.5, describe the task evaluators perform in this space. "
              "Otherwise, here enter 'N/A' if there is a rating instrument.",
              {Sentinel::kNotApplicable}),
          text_question(
              "4.3.7",
              "What is the verbatim question, prompt or instruction given to evaluators (visible "
              "to them during each individual assessment)?",
              "Copy and paste the verbatim text that evaluators see during each assessment, that "
              "is intended to convey the evaluation task to them. E.g. Which of these texts do you "
              "prefer? Or Make any corrections to this text that you think are necessary in order "
              "to improve it to the point where you would be happy to provide it to a client."),
          single_choice(
              "4.3.8", "Form of response elicitation. If none match, select 'Other' and describe.",
              {
                  opt("agreement-with-statement", "(dis)agreement with quality statement"),
                  opt("direct-quality-estimation", "direct quality estimation"),
                  opt("relative-quality-estimation",
                      "relative quality estimation (including ranking)"),
                  opt("counting-occurrences", "counting occurrences in text"),
                  opt("qualitative-feedback",
                      "qualitative feedback (e.g. via comments entered in a text box)"),
                  opt("post-editing-annotation", "evaluation through post-editing/annotation"),
                  opt("output-classification", "output classification or labelling"),
                  opt("user-text-interaction", "user-text interaction measurements"),
                  opt("task-performance", "task performance measurements"),
                  opt("user-system-interaction", "user-system interaction measurements"),
                  other_opt("Other (please specify)"),
              }),
          text_question(
              "4.3.9",
              "How are raw responses from participants aggregated or otherwise processed to "
              "obtain reported scores for this quality criterion? State if no scores reported.",
              "Normally a set of separate assessments is collected from evaluators and is "
              "converted to the results as reported. Describe here the method(s) used in the "
              "conversion(s). E.g. macro-averages or micro-averages are computed from numerical "
              "scores to provide summary, per-system results."),
          text_question(
              "4.3.10",
              "Method(s) used for determining effect size and significance of findings for this "
              "quality criterion.",
              "A list of methods used for calculating the effect size and significance of any "
              "results, both as reported in the paper given in Question 1.1, for this quality "
              "criterion. If none calculated, state 'None'.",
              {Sentinel::kNone}),
          text_question(
              "4.3.11",
              "Has the inter-annotator and intra-annotator agreement between evaluators for this "
              "quality criterion been measured? If yes, what method was used, and what are the "
              "agreement scores?",
              "The methods used to compute, and results obtained from, any measures of "
              "inter-annotator and intra-annotator agreement obtained for the quality criterion."),
      }};
}

Part part_ethics() {
  return Part{
      5,
      "Ethics",
      {
          text_question(
              "5.1",
              "Has the evaluation experiment this sheet is being completed for, or the larger "
              "study it is part of, been approved by a research ethics committee? If yes, which "
              "research ethics committee?",
              "Typically, research organisations, universities and other higher-education "
              "institutions require some form ethical approval before experiments involving human "
              "participants, however innocuous, are permitted to proceed. Please provide here the "
              "name of the body that approved the experiment, or state 'No' if approval has not "
              "(yet) been obtained."),
          text_question(
              "5.2",
              "Do any of the system outputs (or human-authored stand-ins) evaluated, or do any of "
              "the responses collected, in the experiment contain personal data (as defined in "
              "GDPR Art. 4, §1: https://gdpr.eu/article-4-definitions/)? If yes, describe data "
              "and state how addressed.",
              "State 'No' if no personal data as defined by GDPR was recorded or collected, "
              "otherwise explain how conformity with GDPR requirements such as privacy and "
              "security was ensured, e.g. by linking to the (successful) application for ethics "
              "approval from Question 5.1."),
          text_question(
              "5.3",
              "Do any of the system outputs (or human-authored stand-ins) evaluated, or do any of "
              "the responses collected, in the experiment contain special category information "
              "(as defined in GDPR Art. 9, §1: "
              "https://gdpr.eu/article-9-processing-special-categories-of-personal-data-prohibited/"
              ")? If yes, describe data and state how addressed.",
              "State 'No' if no special-category data as defined by GDPR was recorded or "
              "collected, otherwise explain how conformity with GDPR requirements relating to "
              "special-category data was ensured, e.g. by linking to the (successful) application "
              "for ethics approval from Question 5.1."),
          text_question(
              "5.4",
              "Have any impact assessments been carried out for the evaluation experiment, and/or "
              "any data collected/evaluated in connection with it? If yes, summarise approach(es) "
              "and outcomes.",
              "Use this box to describe any ex ante or ex post impact assessments that have been "
              "carried out in relation to the evaluation experiment, such that the assessment "
              "plan and process, as well as the outcomes, were captured in written form. Link to "
              "documents if possible. Types of impact assessment include data protection impact "
              "assessments, e.g. under GDPR. Environmental and social impact assessment "
              "frameworks are also available."),
      }};
}

}  // namespace

const Schema& builtin_schema() {
  static const Schema schema(std::string(kSchemaVersion),
                             {part_paper_and_resources(), part_system(), part_design(),
                              part_ethics()},
                             criterion_block(), kMaxCriteria);
  return schema;
}

}  // namespace heds
