#pragma once

#include <Eigen/Core>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace myriad {

using Scalar = double;

template <typename S>
using MatX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <typename S>
using VecX = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using Mat = MatX<Scalar>;
using Vec = VecX<Scalar>;
using Index = Eigen::Index;

/// RGB image, one channel matrix per plane, values in [0,1].
struct Image {
  Index h = 0;
  Index w = 0;
  std::array<Mat, 3> ch;

  Image() = default;
  Image(Index h_, Index w_) : h(h_), w(w_) {
    for (auto& c : ch) c = Mat::Zero(h, w);
  }
};

enum class Label { normal, abnormal };
enum class Split { train, test };

struct ImageSample {
  std::string id;
  std::string category;
  Split split = Split::train;
  Label label = Label::normal;
  std::uint64_t seed = 0;
  Image pixels;
  Mat mask;  // H x W, values {0,1}
};

inline const char* to_string(Label l) { return l == Label::normal ? "normal" : "abnormal"; }
inline const char* to_string(Split s) { return s == Split::train ? "train" : "test"; }

inline Label label_from_string(const std::string& s) {
  if (s == "normal") return Label::normal;
  if (s == "abnormal") return Label::abnormal;
  throw std::invalid_argument("unknown label: " + s);
}

inline Split split_from_string(const std::string& s) {
  if (s == "train") return Split::train;
  if (s == "test") return Split::test;
  throw std::invalid_argument("unknown split: " + s);
}

inline constexpr const char* kCodeVersion = "myriad 0.1.0";

}  // namespace myriad
