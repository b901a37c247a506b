#include "fixtures.hpp"
#include "gkz/mirror.hpp"
#include <iostream>
#include <chrono>
using namespace gkz; using namespace fx;
int main(){
  auto t0=std::chrono::steady_clock::now();
  auto m = make_model("quintic", rows({{-5,1,1,1,1,1}}), iv({-1,0,0,0,0,0}), 5);
  auto r = run_mirror(m, 9);
  for (auto&[k,v]: r.table.entries) std::cout<<k[0]<<" "<<v<<"\n";
  std::cout<<"pairing dim "<<r.pairing.form_dimension<<" inv "<<r.pairing.tau_invariant<<" pat "<<r.pairing.sign_pattern<<"\n";
  std::cout<<std::chrono::duration<double>(std::chrono::steady_clock::now()-t0).count()<<"s\n";
  auto m2 = make_model("tc", rows({{-3,-3,1,1,1,1,1,1}}), iv({-1,-1,0,0,0,0,0,0}), 9);
  auto r2 = run_mirror(m2, 9);
  for (auto&[k,v]: r2.table.entries) std::cout<<k[0]<<" "<<v<<"\n";
  std::cout<<std::chrono::duration<double>(std::chrono::steady_clock::now()-t0).count()<<"s\n";
  auto m3 = make_model("33", rows({{-3,1,0,1,0,1,0},{-3,0,1,0,1,0,1}}), iv({-1,0,0,0,0,0,0}), 3);
  auto r3 = run_mirror(m3, 6);
  for (auto&[k,v]: r3.table.entries) if(total_degree(k)<=3) std::cout<<k[0]<<","<<k[1]<<" "<<v<<"\n";
  std::cout<<"int "<<r3.table.all_integral()<<" pos "<<r3.table.all_positive()<<" dim "<<r3.pairing.form_dimension<<"\n";
  std::cout<<std::chrono::duration<double>(std::chrono::steady_clock::now()-t0).count()<<"s\n";
}
