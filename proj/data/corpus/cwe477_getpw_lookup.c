#include <pwd.h>
#include <stdio.h>

static void show_user(uid_t uid)
{
    char entry[512];
    getpw(uid, entry);
    puts(entry);
}

int main(void)
{
    show_user(0);
    show_user(1000);
    return 0;
}
