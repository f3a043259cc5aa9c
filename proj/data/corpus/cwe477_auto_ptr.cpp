#include <iostream>
#include <memory>

struct Widget {
    int id;
};

int main()
{
    std::auto_ptr<Widget> w = std::auto_ptr<Widget>(new Widget());
    w->id = 7;
    std::cout << w->id << std::endl;
    return 0;
}
