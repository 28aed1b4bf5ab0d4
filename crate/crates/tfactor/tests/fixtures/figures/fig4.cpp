class A {
.....};
template<class T, int size>
class B {
T arr[size];
.....};
