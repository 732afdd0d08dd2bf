// SPDX-License-Identifier: Apache-2.0
#include "fbsynth/image_io.hpp"

#include <cmath>
#include <filesystem>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include "fbsynth/error.hpp"

namespace fbsynth::io {
namespace {

cv::Mat read_any(const std::string& path, int flags) {
  if (!std::filesystem::exists(path)) throw Error(Errc::io, "no such file: " + path);
  cv::Mat m;
  try {
    m = cv::imread(path, flags);
  } catch (const cv::Exception& e) {
    throw Error(Errc::corrupt_file, path + ": " + e.what());
  }
  if (m.empty()) throw Error(Errc::corrupt_file, "cannot decode image: " + path);
  return m;
}

void write_any(const std::string& path, const cv::Mat& m) {
  const std::vector<int> params = {cv::IMWRITE_PNG_COMPRESSION, 3};
  bool ok = false;
  try {
    ok = cv::imwrite(path, m, params);
  } catch (const cv::Exception& e) {
    throw Error(Errc::io, path + ": " + e.what());
  }
  if (!ok) throw Error(Errc::io, "cannot write " + path);
}

cv::Mat to_mat8(const GrayImage& img) {
  cv::Mat m(img.height(), img.width(), CV_8UC1);
  for (int y = 0; y < img.height(); ++y) {
    auto* row = m.ptr<std::uint8_t>(y);
    for (int x = 0; x < img.width(); ++x) row[x] = to_u8(img.at(x, y));
  }
  return m;
}

}  // namespace

std::uint8_t to_u8(float v) {
  const float c = v < 0.0f ? 0.0f : (v > 1.0f ? 1.0f : v);
  return static_cast<std::uint8_t>(std::lround(c * 255.0f));
}

GrayImage read_gray(const std::string& path) {
  cv::Mat m = read_any(path, cv::IMREAD_ANYDEPTH | cv::IMREAD_GRAYSCALE);
  GrayImage img(m.cols, m.rows);
  if (m.depth() == CV_8U) {
    for (int y = 0; y < m.rows; ++y) {
      const auto* row = m.ptr<std::uint8_t>(y);
      for (int x = 0; x < m.cols; ++x) img.at(x, y) = static_cast<float>(row[x]) / 255.0f;
    }
  } else if (m.depth() == CV_16U) {
    for (int y = 0; y < m.rows; ++y) {
      const auto* row = m.ptr<std::uint16_t>(y);
      for (int x = 0; x < m.cols; ++x) img.at(x, y) = static_cast<float>(row[x]) / 65535.0f;
    }
  } else {
    throw Error(Errc::corrupt_file, path + ": unsupported bit depth");
  }
  return img;
}

void write_gray8(const std::string& path, const GrayImage& img) { write_any(path, to_mat8(img)); }

std::vector<std::uint8_t> encode_gray8(const GrayImage& img) {
  std::vector<std::uint8_t> buf;
  cv::imencode(".png", to_mat8(img), buf, {cv::IMWRITE_PNG_COMPRESSION, 3});
  return buf;
}

Label16 read_label16(const std::string& path) {
  cv::Mat m = read_any(path, cv::IMREAD_UNCHANGED);
  if (m.channels() != 1) throw Error(Errc::corrupt_file, path + ": label map must be single-channel");
  Label16 out{m.cols, m.rows, std::vector<std::uint16_t>(static_cast<std::size_t>(m.cols) * m.rows)};
  for (int y = 0; y < m.rows; ++y)
    for (int x = 0; x < m.cols; ++x) {
      const std::size_t i = static_cast<std::size_t>(y) * m.cols + x;
      if (m.depth() == CV_16U)
        out.data[i] = m.at<std::uint16_t>(y, x);
      else if (m.depth() == CV_8U)
        out.data[i] = m.at<std::uint8_t>(y, x);
      else
        throw Error(Errc::corrupt_file, path + ": label map must be 8- or 16-bit");
    }
  return out;
}

void write_label16(const std::string& path, const Label16& labels) {
  cv::Mat m(labels.height, labels.width, CV_16UC1);
  for (int y = 0; y < labels.height; ++y)
    for (int x = 0; x < labels.width; ++x)
      m.at<std::uint16_t>(y, x) = labels.data[static_cast<std::size_t>(y) * labels.width + x];
  write_any(path, m);
}

BinaryMask read_mask(const std::string& path) {
  cv::Mat m = read_any(path, cv::IMREAD_GRAYSCALE);
  BinaryMask out(m.cols, m.rows);
  for (int y = 0; y < m.rows; ++y) {
    const auto* row = m.ptr<std::uint8_t>(y);
    for (int x = 0; x < m.cols; ++x)
      if (row[x] != 0) out.set(x, y);
  }
  return out;
}

void write_mask(const std::string& path, const BinaryMask& mask) {
  cv::Mat m(mask.height(), mask.width(), CV_8UC1);
  for (int y = 0; y < mask.height(); ++y)
    for (int x = 0; x < mask.width(); ++x) m.at<std::uint8_t>(y, x) = mask.at(x, y) ? 255 : 0;
  write_any(path, m);
}

Rgb8 read_rgb(const std::string& path) {
  cv::Mat m = read_any(path, cv::IMREAD_COLOR);
  Rgb8 out{m.cols, m.rows, std::vector<std::uint8_t>(static_cast<std::size_t>(m.cols) * m.rows * 3)};
  for (int y = 0; y < m.rows; ++y) {
    const auto* row = m.ptr<cv::Vec3b>(y);
    for (int x = 0; x < m.cols; ++x) {
      const std::size_t i = (static_cast<std::size_t>(y) * m.cols + x) * 3;
      out.data[i] = row[x][2];
      out.data[i + 1] = row[x][1];
      out.data[i + 2] = row[x][0];
    }
  }
  return out;
}

void write_rgb(const std::string& path, const Rgb8& img) {
  cv::Mat m(img.height, img.width, CV_8UC3);
  for (int y = 0; y < img.height; ++y) {
    auto* row = m.ptr<cv::Vec3b>(y);
    for (int x = 0; x < img.width; ++x) {
      const std::size_t i = (static_cast<std::size_t>(y) * img.width + x) * 3;
      row[x] = cv::Vec3b(img.data[i + 2], img.data[i + 1], img.data[i]);
    }
  }
  write_any(path, m);
}

}  // namespace fbsynth::io
